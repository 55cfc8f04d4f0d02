"""Size caps for the exponential-cost computations.

Defaults can be raised with ``IHALL_CAP_OVERRIDE``, e.g.
``IHALL_CAP_OVERRIDE="hall=8,torsion=8"``.  Raising them is unsafe only in
the sense that runtimes grow quickly.
"""
from __future__ import annotations

import os

DEFAULTS = {
    "hall": 6,  # module length for Hall numbers / Jordan products
    "torsion": 6,  # total torsion degree in point-resolved products
    "symbolic": 8,  # m in aggregate-layer identities
    "r": 5,  # |r| in aggregate-layer identities
    "brute_dim": 6,  # ambient dimension for oracle subspace enumeration
    "brute_c1": 4,  # |lam|+|mu| for the 1-periodic extension oracle at p=2
}


class SizeCapExceeded(ValueError):
    pass


class CapConfigError(ValueError):
    pass


def parse_override(text: str) -> dict[str, int]:
    out: dict[str, int] = {}
    for item in filter(None, (s.strip() for s in text.split(","))):
        key, sep, val = item.partition("=")
        if not sep or key.strip() not in DEFAULTS:
            raise CapConfigError(f"bad cap override entry {item!r}")
        try:
            out[key.strip()] = int(val)
        except ValueError:
            raise CapConfigError(f"bad cap value in {item!r}") from None
    return out


def cap(name: str) -> int:
    override = os.environ.get("IHALL_CAP_OVERRIDE", "")
    return parse_override(override).get(name, DEFAULTS[name]) if override else DEFAULTS[name]


def require(name: str, value: int, what: str = "") -> None:
    limit = cap(name)
    if value > limit:
        raise SizeCapExceeded(f"{what or name} = {value} exceeds cap {name}={limit}")
