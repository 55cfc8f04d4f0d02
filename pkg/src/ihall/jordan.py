"""The iHall algebra of the Jordan quiver at one closed point.

Basis elements are [M_nu]*[K]^a for a partition nu and a >= 0, where K is the
torus class of the simple module.  Structure constants come from a
stratified count: an extension of the stalk complex of M_lam by that of M_mu
is a pair (e, f) with e in Ext^1(M_lam, M_mu) and f in Hom(M_lam, M_mu).
Grouping f by kernel kappa, image iota and cokernel gamma, the class reduces
to [middle term of the pushed class in Ext^1(M_kappa, M_gamma)] * [K]^{|iota|}.
After the Hom/Ext cancellations (torsion has vanishing Euler form) the
coefficient of [M_nu]*[K]^{|iota|} is

    sum g^lam_{iota,kappa} g^mu_{gamma,iota} a_iota * g^nu_{kappa,gamma} a_kappa a_gamma / a_nu

over all (kappa, iota, gamma).  This construction is checked against the
brute-force 1-periodic enumeration in :mod:`ihall.oracle`.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product as cartesian

from .caps import require
from .curve import partitions
from .report import Report
from .scalars import QuadraticNumber, TruncatedSeries, quantum_integer, series_exp, specialize_v
from .sheaves import Partition, _as_count, aut_partition, hall_number, hall_row, make_partition, size


# ---------------------------------------------------------------------------
# structure constants over any ring containing t = q_x


def _div(a, b):
    if isinstance(a, int) and isinstance(b, int):
        return Fraction(a, b)
    return a / b


@lru_cache(maxsize=None)
def _subs_with_image(lam: Partition, iota: Partition, t) -> tuple:
    """(kappa, g^lam_{iota,kappa}) for kappa a possible kernel with image type iota."""
    out = []
    for kappa in partitions(size(lam) - size(iota)):
        g = hall_number(lam, iota, kappa, t)
        if g != 0:
            out.append((kappa, g))
    return tuple(out)


@lru_cache(maxsize=None)
def structure_constants(lam: Partition, mu: Partition, t) -> tuple:
    """[M_lam]*[M_mu] as sorted ((nu, a), coefficient) pairs in the ring of t."""
    lam, mu = make_partition(lam), make_partition(mu)
    require("hall", size(lam) + size(mu), "|lam|+|mu|")
    out: dict = {}
    for k in range(min(size(lam), size(mu)) + 1):
        for iota in partitions(k):
            a_iota = aut_partition(iota, t)
            for kappa, g_ker in _subs_with_image(lam, iota, t):
                a_kappa = aut_partition(kappa, t)
                for gamma in partitions(size(mu) - k):
                    g_im = hall_number(mu, gamma, iota, t)
                    if g_im == 0:
                        continue
                    weight = g_ker * g_im * a_iota * a_kappa * aut_partition(gamma, t)
                    for nu, g_mid in hall_row(kappa, gamma, t):
                        key = (nu, k)
                        new = out.get(key, 0) + _div(weight * g_mid, aut_partition(nu, t))
                        if new == 0:
                            out.pop(key, None)
                        else:
                            out[key] = new
    return tuple(sorted((key, _as_count(c)) for key, c in out.items()))


# ---------------------------------------------------------------------------
# elements at numeric q_x


def _qn(x, qx: int) -> QuadraticNumber:
    if isinstance(x, QuadraticNumber):
        return x
    if isinstance(x, (int, Fraction)):
        return QuadraticNumber(x)
    return specialize_v(x, qx)


class LocalHallElement:
    """Finite combination of [M_nu]*[K]^a with coefficients in Q(sqrt q_x)."""

    __slots__ = ("qx", "terms")

    def __init__(self, qx: int, terms=None):
        self.qx = qx
        clean = {}
        for (nu, a), c in (terms or {}).items():
            c = _qn(c, qx)
            if not c.is_zero():
                key = (make_partition(nu), a)
                clean[key] = clean.get(key, QuadraticNumber(0)) + c
                if clean[key].is_zero():
                    del clean[key]
        self.terms = clean

    @classmethod
    def basis(cls, qx: int, nu=(), a: int = 0, coeff=1) -> "LocalHallElement":
        return cls(qx, {(tuple(nu), a): coeff})

    @classmethod
    def one(cls, qx: int) -> "LocalHallElement":
        return cls.basis(qx)

    def _same(self, other: "LocalHallElement"):
        if self.qx != other.qx:
            raise ValueError("elements at different points")

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        if not isinstance(other, LocalHallElement):
            other = LocalHallElement.one(self.qx) * other
        self._same(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, QuadraticNumber(0)) + c
        return LocalHallElement(self.qx, out)

    __radd__ = __add__

    def __neg__(self):
        return LocalHallElement(self.qx, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, LocalHallElement):
            c = _qn(other, self.qx)
            return LocalHallElement(self.qx, {k: v * c for k, v in self.terms.items()})
        self._same(other)
        out: dict = {}
        for (lam, a), c in self.terms.items():
            for (mu, b), d in other.terms.items():
                cd = c * d
                for (nu, e), s in i_product(lam, mu, self.qx).terms.items():
                    key = (nu, a + b + e)
                    out[key] = out.get(key, QuadraticNumber(0)) + cd * s
        return LocalHallElement(self.qx, out)

    def __rmul__(self, other):
        return self * other

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, QuadraticNumber)):
            other = LocalHallElement.one(self.qx) * other
        if not isinstance(other, LocalHallElement):
            return NotImplemented
        return self.qx == other.qx and self.terms == other.terms

    def __hash__(self):
        return hash((self.qx, frozenset(self.terms.items())))

    def items(self):
        return sorted(self.terms.items())

    def witness(self) -> list[str]:
        return [f"{c} * {_key_str(k)}" for k, c in self.items()]

    def __str__(self):
        return " + ".join(self.witness()) or "0"

    def __repr__(self):
        return f"LocalHallElement(q_x={self.qx}: {self})"


def _key_str(key) -> str:
    nu, a = key
    base = "[" + ",".join(map(str, nu)) + "]"
    return base if a == 0 else f"{base}*K^{a}"


class JordanProductTable:
    """Memoized products [M_lam]*[M_mu] at residue field size q_x."""

    def __init__(self, qx: int):
        self.qx = qx
        self.cache: dict = {}

    def product(self, lam, mu) -> LocalHallElement:
        key = (make_partition(lam), make_partition(mu))
        if key not in self.cache:
            self.cache[key] = LocalHallElement(self.qx, dict(structure_constants(key[0], key[1], self.qx)))
        return self.cache[key]


_TABLES: dict[int, JordanProductTable] = {}


def product_table(qx: int) -> JordanProductTable:
    if qx not in _TABLES:
        _TABLES[qx] = JordanProductTable(qx)
    return _TABLES[qx]


def i_product(lam, mu, qx: int) -> LocalHallElement:
    return product_table(qx).product(lam, mu)


# ---------------------------------------------------------------------------
# imaginary root vectors at a point


def _vx(qx: int) -> QuadraticNumber:
    return QuadraticNumber.sqrt(qx)


def _qint_at(n: int, qx: int) -> QuadraticNumber:
    return specialize_v(quantum_integer(n), qx)


def n_factor(length: int, qx: int) -> int:
    """prod_{i=1}^{length} (1 - q_x^i); empty product is 1."""
    out = 1
    for i in range(1, length + 1):
        out *= 1 - qx ** i
    return out


def local_theta(m: int, qx: int) -> LocalHallElement:
    v = _vx(qx)
    return LocalHallElement.basis(qx, (m,), 0, (v - v.inverse()).inverse())


def local_p(m: int, qx: int) -> LocalHallElement:
    terms = {}
    for lam in partitions(m):
        terms[(lam, 0)] = Fraction(n_factor(len(lam) - 1, qx), aut_partition(lam, qx))
    return LocalHallElement(qx, terms)


def local_h(m: int, qx: int) -> LocalHallElement:
    if m < 1:
        raise ValueError("m must be positive")
    v = _vx(qx)
    out = local_p(m, qx) * (v ** m * _qint_at(m, qx) * Fraction(1, m))
    if m % 2 == 0:
        half = m // 2
        out = out - LocalHallElement.basis(qx, (), half, v ** half * _qint_at(half, qx) * Fraction(1, m))
    return out


def local_theta_series(qx: int, order: int) -> TruncatedSeries:
    """1 + sum_m [M_(m)] z^m."""
    zero = LocalHallElement(qx)
    coeffs = [LocalHallElement.one(qx)] + [LocalHallElement.basis(qx, (m,)) for m in range(1, order + 1)]
    return TruncatedSeries(coeffs, order, zero)


def local_exp_side(qx: int, order: int) -> TruncatedSeries:
    """exp((v_x - v_x^{-1}) sum_m H_{m,x} z^m)."""
    v = _vx(qx)
    scale = v - v.inverse()
    zero = LocalHallElement(qx)
    gen = [zero] + [local_h(m, qx) * scale for m in range(1, order + 1)]
    return series_exp(TruncatedSeries(gen, order, zero), LocalHallElement.one(qx))


# ---------------------------------------------------------------------------
# verifiers


def check_commutativity(qx: int, size_bound: int) -> Report:
    rep = Report("jordan-comm", {"q": qx, "size": size_bound})
    for n in range(size_bound + 1):
        for k in range(n // 2 + 1):
            for lam in partitions(k):
                for mu in partitions(n - k):
                    if k == n - k and mu < lam:
                        continue
                    rep.zero_check(
                        f"q={qx},{lam}*{mu}",
                        lambda lam=lam, mu=mu: i_product(lam, mu, qx) - i_product(mu, lam, qx),
                    )
    return rep


def check_associativity(qx: int, size_bound: int) -> Report:
    rep = Report("jordan-assoc", {"q": qx, "size": size_bound})
    parts = [lam for n in range(1, size_bound + 1) for lam in partitions(n)]
    for lam, mu, rho in cartesian(parts, repeat=3):
        if size(lam) + size(mu) + size(rho) > size_bound:
            continue
        a, b, c = (LocalHallElement.basis(qx, x) for x in (lam, mu, rho))
        rep.zero_check(f"q={qx},{lam}*{mu}*{rho}", lambda a=a, b=b, c=c: (a * b) * c - a * (b * c))
    return rep


def verify_local_exp(qx: int, order: int) -> Report:
    rep = Report("local-exp", {"q": qx, "order": order})
    lhs = local_theta_series(qx, order)
    rhs = local_exp_side(qx, order)
    for m in range(order + 1):
        rep.zero_check(f"q={qx},z^{m}", lambda m=m: lhs[m] - rhs[m])
    return rep
