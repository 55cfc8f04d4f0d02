"""Isomorphism classes of coherent sheaves on P^1 and their counting data.

A sheaf is a multiset of line-bundle degrees plus a torsion type (a
partition at each of finitely many closed points).  Torsion at a point x of
degree d is a module over a DVR with residue field F_{q^d}, so all local
counts are evaluated at q_x = q^d.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Mapping

from .caps import require
from .curve import PointIndex, partitions

Partition = tuple  # weakly decreasing tuple of positive ints


class UnsupportedPair(ValueError):
    pass


# ---------------------------------------------------------------------------
# partitions


def make_partition(parts: Iterable[int]) -> Partition:
    parts = [int(p) for p in parts]
    if any(p < 0 for p in parts):
        raise ValueError("negative part")
    return tuple(sorted((p for p in parts if p), reverse=True))


def size(lam: Partition) -> int:
    return sum(lam)


def n_stat(lam: Partition) -> int:
    """n(lam) = sum (i-1) lam_i."""
    return sum(i * p for i, p in enumerate(lam))


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def multiplicities(lam: Partition) -> dict[int, int]:
    out: dict[int, int] = {}
    for p in lam:
        out[p] = out.get(p, 0) + 1
    return out


def _power(t, k: int):
    """t**k in the scalar ring of t (ints are promoted to Fraction)."""
    if isinstance(t, int):
        return Fraction(t) ** k
    return t ** k


def _as_count(x):
    """Return an int when an exact Fraction value is integral."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


# ---------------------------------------------------------------------------
# sheaf classes


@dataclass(frozen=True, order=True)
class TorsionType:
    items: tuple = ()

    def __post_init__(self):
        pairs = self.items.items() if isinstance(self.items, Mapping) else self.items
        norm = []
        for x, lam in pairs:
            lam = make_partition(lam)
            if lam:
                norm.append((x, lam))
        norm.sort()
        pts = [x for x, _ in norm]
        if len(set(pts)) != len(pts):
            raise ValueError("point repeated in torsion type")
        object.__setattr__(self, "items", tuple(norm))

    @property
    def degree(self) -> int:
        return sum(x.degree * size(lam) for x, lam in self.items)

    @property
    def support(self) -> tuple[PointIndex, ...]:
        return tuple(x for x, _ in self.items)

    def at(self, x: PointIndex) -> Partition:
        for y, lam in self.items:
            if y == x:
                return lam
        return ()

    def is_empty(self) -> bool:
        return not self.items

    def union(self, other: "TorsionType") -> "TorsionType":
        if set(self.support) & set(other.support):
            raise ValueError("supports overlap")
        return TorsionType(self.items + other.items)

    def replace(self, x: PointIndex, lam: Partition) -> "TorsionType":
        rest = [(y, mu) for y, mu in self.items if y != x]
        return TorsionType(rest + [(x, lam)])

    def __str__(self):
        return "+".join(f"S[{x}]{lam}" for x, lam in self.items) or "0"


EMPTY_TORSION = TorsionType(())


def single(x: PointIndex, lam) -> TorsionType:
    return TorsionType(((x, lam),))


def profile_torsion(profile) -> TorsionType:
    """Torsion type S_n of a cyclic profile {x: n_x}."""
    return TorsionType(tuple((x, (n,)) for x, n in profile))


@dataclass(frozen=True, order=True)
class SheafClass:
    bundles: tuple = ()
    torsion: TorsionType = EMPTY_TORSION

    def __post_init__(self):
        object.__setattr__(self, "bundles", tuple(sorted(int(b) for b in self.bundles)))

    @property
    def rank(self) -> int:
        return len(self.bundles)

    def is_zero(self) -> bool:
        return not self.bundles and self.torsion.is_empty()

    def is_torsion(self) -> bool:
        return not self.bundles

    def __str__(self):
        parts = [f"O({b})" for b in self.bundles]
        if not self.torsion.is_empty():
            parts.append(str(self.torsion))
        return "+".join(parts) or "0"


ZERO_SHEAF = SheafClass()


def line(r: int) -> SheafClass:
    return SheafClass((r,))


def torsion_sheaf(t: TorsionType) -> SheafClass:
    return SheafClass((), t)


@dataclass(frozen=True, order=True)
class K0Class:
    rank: int = 0
    degree: int = 0

    def __add__(self, other: "K0Class") -> "K0Class":
        return K0Class(self.rank + other.rank, self.degree + other.degree)

    def __sub__(self, other: "K0Class") -> "K0Class":
        return K0Class(self.rank - other.rank, self.degree - other.degree)

    def __neg__(self) -> "K0Class":
        return K0Class(-self.rank, -self.degree)

    def __mul__(self, n: int) -> "K0Class":
        return K0Class(self.rank * n, self.degree * n)

    __rmul__ = __mul__

    def __str__(self):
        return f"({self.rank},{self.degree})"


DELTA = K0Class(0, 1)
ZERO_K0 = K0Class(0, 0)


def k0_class(m: SheafClass) -> K0Class:
    return K0Class(m.rank, sum(m.bundles) + m.torsion.degree)


def euler_form(a: K0Class, b: K0Class) -> int:
    """dim Hom - dim Ext^1 on K_0 = Z^2 (rank, degree)."""
    return a.rank * b.rank + a.rank * b.degree - b.rank * a.degree


def _summands(m: SheafClass):
    for b in m.bundles:
        yield ("O", b)
    for x, lam in m.torsion.items:
        yield ("S", (x, lam))


def _hom_ext_pair(s, t) -> tuple[int, int]:
    (ks, ds), (kt, dt) = s, t
    if ks == "O" and kt == "O":
        return max(dt - ds + 1, 0), max(ds - dt - 1, 0)
    if ks == "O" and kt == "S":
        x, lam = dt
        return x.degree * size(lam), 0
    if ks == "S" and kt == "O":
        x, lam = ds
        return 0, x.degree * size(lam)
    if ks == "S" and kt == "S":
        (x, lam), (y, mu) = ds, dt
        if x != y:
            return 0, 0
        h = x.degree * sum(min(a, b) for a in lam for b in mu)
        return h, h
    raise UnsupportedPair((s, t))


def hom_dim(m: SheafClass, n: SheafClass) -> int:
    return sum(_hom_ext_pair(s, t)[0] for s in _summands(m) for t in _summands(n))


def ext_dim(m: SheafClass, n: SheafClass) -> int:
    return sum(_hom_ext_pair(s, t)[1] for s in _summands(m) for t in _summands(n))


# ---------------------------------------------------------------------------
# local counts at a point with residue field of size t


def aut_partition(lam: Partition, t):
    """|Aut| of the nilpotent module of type lam over F_t[[x]].

    a_lam(t) = t^{|lam| + 2 n(lam)} prod_i phi_{m_i}(1/t).
    """
    out = _power(t, size(lam) + 2 * n_stat(lam))
    inv = _power(t, -1)
    for mult in multiplicities(lam).values():
        for j in range(1, mult + 1):
            out = out * (1 - inv ** j)
    return _as_count(out)


def aut_order(t: TorsionType, q: int):
    out = 1
    for x, lam in t.items:
        out *= aut_partition(lam, q ** x.degree)
    return out


def hom_count_torsion(lam: Partition, mu: Partition, qx):
    return _as_count(_power(qx, sum(min(a, b) for a in lam for b in mu)))


def epi_from_line_count(c: int, qx):
    """Surjections O(s) -> S_x^{(c)}: generators of a cyclic module of length c."""
    if c < 1:
        raise ValueError("c must be positive")
    return _as_count(_power(qx, c) - _power(qx, c - 1))


# ---------------------------------------------------------------------------
# Hall numbers via the classical Hall algebra.
#
# u_mu * u_(1^m) = sum_lam G^lam_{mu,(1^m)} u_lam over vertical m-strips lam/mu
# (explicit product formula below).  Products of the u_(1^m) are unitriangular
# against u_lam in lexicographic order, so every u_nu is a combination of such
# products and every Hall number follows.  Works over any commutative ring
# containing t, including Q(v) with t = v^2.


def _gauss(n: int, k: int, u):
    """Gaussian binomial [n choose k] in u (recurrence, no division)."""
    if k < 0 or k > n:
        return 0
    row = [1]
    for i in range(1, n + 1):
        new = [1] * (i + 1)
        for j in range(1, i):
            new[j] = row[j - 1] + u ** j * row[j]
        row = new
    return row[k]


def _vertical_strips(mu: Partition, m: int):
    rows = len(mu) + m
    base = list(mu) + [0] * m
    for chosen in combinations(range(rows), m):
        lam = list(base)
        for i in chosen:
            lam[i] += 1
        if all(lam[i] >= lam[i + 1] for i in range(rows - 1)):
            yield make_partition(lam)


def pieri_coefficient(lam: Partition, mu: Partition, m: int, t):
    """G^lam_{mu,(1^m)}(t) for a vertical strip lam/mu."""
    lc, mc = conjugate(lam), conjugate(mu)
    ell = len(lc)
    lc_ext = list(lc) + [0]
    mc_ext = list(mc) + [0] * (ell + 1 - len(mc))
    coef = _power(t, n_stat(lam) - n_stat(mu) - m * (m - 1) // 2)
    inv = _power(t, -1)
    for i in range(ell):
        coef = coef * _gauss(lc_ext[i] - lc_ext[i + 1], lc_ext[i] - mc_ext[i], inv)
    return coef


def _add_into(acc: dict, key, val):
    new = acc.get(key, 0) + val
    if new == 0:
        acc.pop(key, None)
    else:
        acc[key] = new


@lru_cache(maxsize=None)
def _times_elementary(vec: tuple, m: int, t) -> tuple:
    out: dict = {}
    for mu, c in vec:
        for lam in _vertical_strips(mu, m):
            _add_into(out, lam, c * pieri_coefficient(lam, mu, m, t))
    return tuple(sorted(out.items()))


def _times_columns(vec: tuple, cols: Partition, t) -> tuple:
    for c in cols:
        vec = _times_elementary(vec, c, t)
    return vec


@lru_cache(maxsize=None)
def _u_in_elementary(nu: Partition, t) -> tuple:
    """u_nu as sum_kappa b_kappa E_kappa where E_kappa = prod_j u_(1^{kappa'_j})."""
    one = _power(t, 0)
    e_nu = dict(_times_columns(((((), one),)), conjugate(nu), t))
    lead = e_nu.pop(nu)
    if any(lam > nu for lam in e_nu):
        raise ArithmeticError(f"elementary product for {nu} not triangular")
    out: dict = {nu: one}
    for lam, c in e_nu.items():
        for kappa, b in _u_in_elementary(lam, t):
            _add_into(out, kappa, -c * b)
    return tuple(sorted((k, b / lead) for k, b in out.items()))


@lru_cache(maxsize=None)
def hall_row(mu: Partition, nu: Partition, t) -> tuple:
    """u_mu * u_nu = sum_lam G^lam_{mu nu}(t) u_lam as sorted (lam, G) pairs."""
    require("hall", size(mu) + size(nu), "module length")
    one = _power(t, 0)
    out: dict = {}
    for kappa, b in _u_in_elementary(nu, t):
        for lam, c in _times_columns(((mu, one),), conjugate(kappa), t):
            _add_into(out, lam, b * c)
    return tuple(sorted((lam, _as_count(c)) for lam, c in out.items()))


def hall_number(lam: Partition, mu: Partition, nu: Partition, q):
    """g^lam_{mu nu}(q): submodules of type nu in the type-lam module with quotient of type mu."""
    lam, mu, nu = make_partition(lam), make_partition(mu), make_partition(nu)
    if size(mu) + size(nu) != size(lam):
        return 0
    require("hall", size(lam), "module length")
    return dict(hall_row(mu, nu, q)).get(lam, 0)


def submodule_count(lam: Partition, iota: Partition, q):
    """Submodules of type iota (any quotient) in the type-lam module."""
    return sum(hall_number(lam, nu, iota, q) for nu in partitions(size(lam) - size(iota)))


def mono_count(iota: Partition, lam: Partition, qx):
    """Injective module maps M_iota -> M_lam."""
    return _as_count(submodule_count(lam, iota, qx) * aut_partition(iota, qx))


def hall_polynomial(lam: Partition, mu: Partition, nu: Partition) -> list[Fraction]:
    """Coefficients (low to high) of g^lam_{mu nu} as a polynomial in q,
    recovered by Lagrange interpolation of exact values at q = 2, 3, ..."""
    lam, mu, nu = make_partition(lam), make_partition(mu), make_partition(nu)
    deg = max(n_stat(lam) - n_stat(mu) - n_stat(nu), 0)
    xs = list(range(2, deg + 3))
    ys = [Fraction(hall_number(lam, mu, nu, x)) for x in xs]
    coeffs = [Fraction(0)] * len(xs)
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xj * basis[k + 1]
            denom *= xi - xj
        for k, c in enumerate(basis):
            coeffs[k] += yi * c / denom
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs
