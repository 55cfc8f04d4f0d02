"""Torsion elements summed over point assignments, with q symbolic.

A shape is a multiset of slots (d, lam).  U[S] is the sum of [S_t] over all
torsion types t whose multiset of (degree of x, partition at x) equals S.
Point counts N_d are polynomials in q = v^2 and Jordan constants are
evaluated at q_x = v^{2d}, so products of shape sums stay exact in Q(v).
This lets the torsion generating-function identity be checked symbolically.
"""
from __future__ import annotations

from collections import Counter
from fractions import Fraction

from .curve import _divisors, _mobius, partitions
from .jordan import structure_constants
from .report import Report
from .scalars import RationalFunctionV, TruncatedSeries, V, quantum_integer, rfv, series_exp
from .sheaves import UnsupportedPair, aut_partition

_v = rfv(V)
_q = _v * _v


def point_count_symbolic(d: int) -> RationalFunctionV:
    """N_d as a polynomial in q = v^2."""
    if d == 1:
        return _q + 1
    total = rfv(0)
    for e in _divisors(d):
        total = total + _q ** (d // e) * _mobius(e)
    return total * Fraction(1, d)


def _shape(slots) -> tuple:
    return tuple(sorted(slots))


class ShapeElement:
    """Combination of U[S]*K_{(0,a)} with coefficients in Q(v)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean: dict = {}
        for (shape, a), c in (terms or {}).items():
            key = (_shape(shape), a)
            c = rfv(c) + clean[key] if key in clean else rfv(c)
            if c.is_zero():
                clean.pop(key, None)
            else:
                clean[key] = c
        self.terms = clean

    @classmethod
    def one(cls) -> "ShapeElement":
        return cls({((), 0): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        if not isinstance(other, ShapeElement):
            other = ShapeElement.one() * other
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return ShapeElement(out)

    __radd__ = __add__

    def __neg__(self):
        return ShapeElement({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, ShapeElement):
            c = rfv(other)
            return ShapeElement({k: v * c for k, v in self.terms.items()})
        out = ShapeElement()
        for (s1, a1), c1 in self.terms.items():
            for (s2, a2), c2 in other.terms.items():
                out = out + _shape_product(s1, s2).shift(a1 + a2) * (c1 * c2)
        return out

    __rmul__ = __mul__

    def shift(self, a: int) -> "ShapeElement":
        return ShapeElement({(s, b + a): c for (s, b), c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, ShapeElement):
            other = ShapeElement.one() * other
        return self.terms == other.terms

    def witness(self) -> list[str]:
        return [f"({c}) U{list(s)}*K(0,{a})" for (s, a), c in sorted(self.terms.items())]

    def __str__(self):
        return " + ".join(self.witness()) or "0"


def _times_slot(shape: tuple, d: int, mu: tuple) -> ShapeElement:
    """U[shape] * U[{(d, mu)}]."""
    out: dict = {}

    def add(key, c):
        out[key] = out[key] + c if key in out else rfv(c)

    counts = Counter(shape)
    new = _shape(shape + ((d, mu),))
    add((new, 0), Counter(new)[(d, mu)])
    t = _q ** d
    for (e, lam) in counts:
        if e != d:
            continue
        rest = list(shape)
        rest.remove((d, lam))
        for (nu, a), c in structure_constants(lam, mu, t):
            if nu:
                target = _shape(rest + [(d, nu)])
                add((target, a * d), rfv(c) * Counter(target)[(d, nu)])
            else:
                target = _shape(rest)
                free = point_count_symbolic(d) - sum(1 for (e2, _) in target if e2 == d)
                add((target, a * d), rfv(c) * free)
    return ShapeElement(out)


def _shape_product(s1: tuple, s2: tuple) -> ShapeElement:
    if len(s1) < len(s2):
        s1, s2 = s2, s1
    if not s2:
        return ShapeElement({(s1, 0): 1})
    if len(s2) == 1:
        (d, mu), = s2
        return _times_slot(s1, d, mu)
    raise UnsupportedPair("shape products need one factor with at most one slot")


def _cyclic_shapes(m: int):
    """Multisets of (d, (n,)) slots with sum d*n = m."""
    def rec(remaining, smallest):
        if remaining == 0:
            yield ()
            return
        for d in range(1, remaining + 1):
            for n in range(1, remaining // d + 1):
                slot = (d, (n,))
                if slot < smallest:
                    continue
                for rest in rec(remaining - d * n, slot):
                    yield (slot,) + rest
    return list(rec(m, (0, ())))


def theta_shape(m: int) -> ShapeElement:
    """Theta_m = sum over cyclic profiles / ((q-1) v^{m-1})."""
    coeff = ((_q - 1) * _v ** (m - 1)).inverse()
    return ShapeElement({(s, 0): coeff for s in _cyclic_shapes(m)})


def _n_factor(length: int, t):
    out = rfv(1)
    for i in range(1, length + 1):
        out = out * (1 - t ** i)
    return out


def h_shape(m: int) -> ShapeElement:
    qm = rfv(quantum_integer(m)) * Fraction(1, m)
    out: dict = {}
    for d in _divisors(m):
        t = _q ** d
        for lam in partitions(m // d):
            out[(((d, lam),), 0)] = qm * d * _n_factor(len(lam) - 1, t) / aut_partition(lam, t)
    if m % 2 == 0:
        out[((), m // 2)] = -qm
    return ShapeElement(out)


def verify_exp_symbolic(order: int) -> Report:
    """1 + sum (v - v^-1) Theta_m z^m = exp((v - v^-1) sum H_m z^m) with q symbolic."""
    rep = Report("exp-symbolic", {"order": order})
    scale = _v - _v ** -1
    zero = ShapeElement()
    lhs = TruncatedSeries([ShapeElement.one()] + [theta_shape(m) * scale for m in range(1, order + 1)], order, zero)
    gen = TruncatedSeries([zero] + [h_shape(m) * scale for m in range(1, order + 1)], order, zero)
    rhs = series_exp(gen, ShapeElement.one())
    for m in range(order + 1):
        rep.zero_check(f"z^{m}", lambda m=m: lhs[m] - rhs[m])
    return rep


def order_two_identity() -> ShapeElement:
    """Theta_2 - H_2 - ((v - v^-1)/2) H_1^2, which must vanish."""
    h1 = h_shape(1)
    return theta_shape(2) - h_shape(2) - (h1 * h1) * ((_v - _v ** -1) * Fraction(1, 2))


def order_one_identity() -> ShapeElement:
    return theta_shape(1) - h_shape(1)

