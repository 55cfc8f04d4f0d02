"""Exact iHall algebra computations for the projective line over a finite field."""
from .hall import DrinfeldGenerator, HallElement, omega_image, theta_hat, h_hat
from .report import Report
from .scalars import LaurentPoly, QuadraticNumber, RationalFunctionV, V, rfv, specialize_v

__version__ = "0.1.0"

__all__ = [
    "DrinfeldGenerator",
    "HallElement",
    "LaurentPoly",
    "QuadraticNumber",
    "RationalFunctionV",
    "Report",
    "V",
    "h_hat",
    "omega_image",
    "rfv",
    "specialize_v",
    "theta_hat",
]
