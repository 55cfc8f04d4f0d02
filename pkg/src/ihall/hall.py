"""The iHall algebra of P^1: elements, products and generator families.

Two layers share one element type.

* Symbolic (coefficients in Q(v)): basis keys are aggregate symbols.
  A_{s,k} is the sum of [O(s)+S_n] over cyclic profiles of degree k,
  T_k the sum of [S_n] (T_0 is the torus), and [O(a)+O(b)] a bundle pair.
  The line-bundle identities close over these symbols.
* Numeric (coefficients in Q(sqrt q)): basis keys are resolved sheaf classes
  at explicit (symbolic-index) points, times a torus class.

Keys of the two layers never share an element; :func:`expand` maps the
symbolic layer to the numeric one at a given q.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .curve import census, enumerate_cyclic_profiles, is_prime_power, partitions
from .jordan import i_product, n_factor
from .scalars import LaurentPoly, QuadraticNumber, RationalFunctionV, V, quantum_integer, rfv, specialize_v
from .sheaves import (
    EMPTY_TORSION,
    ZERO_K0,
    ZERO_SHEAF,
    K0Class,
    SheafClass,
    TorsionType,
    UnsupportedPair,
    aut_partition,
    hall_number,
    k0_class,
    profile_torsion,
    single,
    size,
)


class LayerViolation(TypeError):
    pass


# ---------------------------------------------------------------------------
# basis keys


@dataclass(frozen=True, order=True)
class Resolved:
    sheaf: SheafClass
    torus: K0Class = ZERO_K0

    def shift(self, alpha: K0Class) -> "Resolved":
        return Resolved(self.sheaf, self.torus + alpha)

    def __str__(self):
        return _with_torus(f"[{self.sheaf}]" if not self.sheaf.is_zero() else "", self.torus)


@dataclass(frozen=True, order=True)
class AggregateA:
    s: int
    k: int
    torus: K0Class = ZERO_K0

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("k must be nonnegative")

    def shift(self, alpha: K0Class) -> "AggregateA":
        return AggregateA(self.s, self.k, self.torus + alpha)

    def __str__(self):
        return _with_torus(f"A({self.s},{self.k})", self.torus)


@dataclass(frozen=True, order=True)
class AggregateT:
    k: int
    torus: K0Class = ZERO_K0

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("k must be nonnegative")

    def shift(self, alpha: K0Class) -> "AggregateT":
        return AggregateT(self.k, self.torus + alpha)

    def __str__(self):
        return _with_torus(f"T({self.k})" if self.k else "", self.torus)


@dataclass(frozen=True, order=True)
class BundlePair:
    a: int
    b: int
    torus: K0Class = ZERO_K0

    def __post_init__(self):
        if self.a > self.b:
            a, b = self.b, self.a
            object.__setattr__(self, "a", a)
            object.__setattr__(self, "b", b)

    def shift(self, alpha: K0Class) -> "BundlePair":
        return BundlePair(self.a, self.b, self.torus + alpha)

    def __str__(self):
        return _with_torus(f"[O({self.a})+O({self.b})]", self.torus)


AGGREGATE_KEYS = (AggregateA, AggregateT, BundlePair)
_KEY_RANK = {AggregateT: 0, AggregateA: 1, BundlePair: 2, Resolved: 3}


def _with_torus(base: str, torus: K0Class) -> str:
    if torus == ZERO_K0:
        return base or "1"
    k = f"K{torus}"
    return f"{base}*{k}" if base else k


def _sort_key(key):
    return (_KEY_RANK[type(key)], key)


def key_class(key) -> K0Class:
    """Grading of a basis key in K_0: sheaf class plus twice the torus part.

    [C_f] = [ker f + coker f]*[K_{im f}] and ker + coker + 2 im = source + target,
    so this is additive under every product.
    """
    if isinstance(key, Resolved):
        base = k0_class(key.sheaf)
    elif isinstance(key, AggregateA):
        base = K0Class(1, key.s + key.k)
    elif isinstance(key, AggregateT):
        base = K0Class(0, key.k)
    else:
        base = K0Class(2, key.a + key.b)
    return base + key.torus * 2


# ---------------------------------------------------------------------------
# elements


def _is_scalar(x) -> bool:
    return isinstance(x, (int, Fraction, LaurentPoly, RationalFunctionV, QuadraticNumber))


class HallElement:
    """Finite combination of basis keys; symbolic when q is None, else numeric at q."""

    __slots__ = ("q", "terms")

    def __init__(self, terms=None, q: int | None = None):
        if q is not None and not is_prime_power(q):
            raise ValueError(f"{q} is not a prime power")
        self.q = q
        clean: dict = {}
        for key, c in (terms or {}).items():
            self._check_key(key)
            c = self._scalar(c)
            if key in clean:
                c = clean[key] + c
            if c.is_zero():
                clean.pop(key, None)
            else:
                clean[key] = c
        self.terms = clean

    # -- construction helpers

    @property
    def mode(self) -> str:
        return "symbolic" if self.q is None else "numeric"

    def _check_key(self, key):
        if self.q is None and not isinstance(key, AGGREGATE_KEYS):
            raise LayerViolation(f"resolved key {key} in a symbolic element")
        if self.q is not None and not isinstance(key, Resolved):
            raise LayerViolation(f"aggregate key {key} in a numeric element; use expand()")

    def _scalar(self, c):
        if self.q is None:
            if isinstance(c, QuadraticNumber):
                raise TypeError("numeric scalar in a symbolic element")
            return rfv(c)
        if isinstance(c, QuadraticNumber):
            return c
        return specialize_v(c, self.q)

    @classmethod
    def zero(cls, q: int | None = None) -> "HallElement":
        return cls({}, q)

    @classmethod
    def one(cls, q: int | None = None) -> "HallElement":
        return cls.torus(ZERO_K0, q)

    @classmethod
    def torus(cls, alpha: K0Class, q: int | None = None, coeff=1) -> "HallElement":
        key = AggregateT(0, alpha) if q is None else Resolved(ZERO_SHEAF, alpha)
        return cls({key: coeff}, q)

    @classmethod
    def basis(cls, key, coeff=1, q: int | None = None) -> "HallElement":
        return cls({key: coeff}, q)

    def _same(self, other: "HallElement"):
        if self.q != other.q:
            raise LayerViolation(f"mixing elements at q={self.q} and q={other.q}")

    def _lift(self, other) -> "HallElement":
        if isinstance(other, HallElement):
            self._same(other)
            return other
        if _is_scalar(other):
            return HallElement.one(self.q) * other
        raise TypeError(f"cannot combine HallElement with {type(other).__name__}")

    # -- vector space

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return HallElement(out, self.q)

    __radd__ = __add__

    def __neg__(self):
        return HallElement({k: -c for k, c in self.terms.items()}, self.q)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "HallElement":
        c = self._scalar(c)
        return HallElement({k: v * c for k, v in self.terms.items()}, self.q)

    def torus_multiply(self, alpha: K0Class) -> "HallElement":
        return HallElement({k.shift(alpha): c for k, c in self.terms.items()}, self.q)

    # -- algebra

    def __mul__(self, other):
        if _is_scalar(other):
            return self.scale(other)
        if not isinstance(other, HallElement):
            return NotImplemented
        self._same(other)
        out: dict = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                c12 = c1 * c2
                for k, c in key_product(k1, k2, self.q).items():
                    term = c12 * c
                    out[k] = out[k] + term if k in out else term
        return HallElement(out, self.q)

    def __rmul__(self, other):
        if _is_scalar(other):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if _is_scalar(other):
            other = HallElement.one(self.q) * other
        if not isinstance(other, HallElement):
            return NotImplemented
        return self.q == other.q and self.terms == other.terms

    def __hash__(self):
        return hash((self.q, frozenset(self.terms.items())))

    # -- inspection

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: _sort_key(kv[0]))

    def coefficient(self, key):
        return self.terms.get(key, self._scalar(0))

    def keys(self):
        return [k for k, _ in self.items()]

    def witness(self) -> list[str]:
        return [f"({c}) {k}" for k, c in self.items()]

    def to_json(self) -> str:
        data = {
            "mode": self.mode,
            "q": self.q,
            "terms": [{"key": str(k), "coeff": str(c)} for k, c in self.items()],
        }
        return json.dumps(data, sort_keys=True)

    def __str__(self):
        return " + ".join(self.witness()) or "0"

    def __repr__(self):
        return f"HallElement[{self.mode}{'' if self.q is None else f' q={self.q}'}]({self})"


def commutator(a: HallElement, b: HallElement, x=1) -> HallElement:
    """[a, b]_x = a*b - x*b*a."""
    return a * b - (b * a) * x


# ---------------------------------------------------------------------------
# symbolic layer

_Q = rfv(V * V)


def _v(n: int) -> RationalFunctionV:
    return rfv(LaurentPoly.monomial(1, n))


def _sym(terms) -> HallElement:
    return HallElement(dict(terms), None)


def line_times_line(r: int, s: int) -> HallElement:
    """[O(r)]*[O(s)] in aggregate symbols.

    The twist is v^<O(r),O(s)> = v^{s-r+1}.  For r <= s there is no Ext^1 and
    the Hom part contributes [coker f]*[K_{O(r)}] per nonzero f; the nonzero
    maps O(r) -> O(s) hit each cyclic profile of degree s-r exactly q-1 times.
    For r > s there is no Hom, and extension classes are counted by the
    splitting type of the middle bundle.
    """
    if r <= s:
        c = _v(-(s - r + 1))
        return _sym({BundlePair(r, s): c, AggregateT(s - r, K0Class(1, r)): c * (_Q - 1)})
    n = r - s - 1
    out = {BundlePair(s, r): _v(-n)}
    for a in range(1, (r - s) // 2 + 1):
        if s + a == r - a:
            count = (_v(2) - 1) * _v(4 * a - 4)
        else:
            count = (_v(4) - 1) * _v(4 * a - 4)
        out[BundlePair(s + a, r - a)] = count * _v(-n)
    return _sym(out)


def theta_times_line(m: int, r: int) -> HallElement:
    """Theta_m * [O(r)]."""
    if m < 1:
        raise ValueError("m must be positive")
    two = rfv(quantum_integer(2))
    out = {AggregateA(r, m): ((_Q - 1) * _v(2 * m - 1)).inverse()}
    for a in range(1, m + 1):
        out[AggregateA(r + a, m - a)] = two * _v(4 * a - 2 * m - 2)
    return _sym(out)


def line_times_theta(r: int, m: int) -> HallElement:
    """[O(r)] * Theta_m."""
    if m < 1:
        raise ValueError("m must be positive")
    two = rfv(quantum_integer(2))
    out = {AggregateA(r, m): ((_Q - 1) * _v(2 * m - 1)).inverse()}
    for a in range(1, m + 1):
        out[AggregateA(r - a, m - a, K0Class(0, a))] = two * _v(4 * a - 2 * m - 2)
    return _sym(out)


def theta_hat_symbolic(m: int) -> HallElement:
    """Theta_m = T_m / ((q-1) v^{m-1}), Theta_0 = 1/(v - v^-1), zero for m < 0."""
    if m < 0:
        return HallElement.zero()
    if m == 0:
        return HallElement.one() * rfv(V - V ** -1).inverse()
    return _sym({AggregateT(m): ((_Q - 1) * _v(m - 1)).inverse()})


def line_symbolic(r: int) -> HallElement:
    return _sym({AggregateA(r, 0): 1})


def _symbolic_key_product(k1, k2) -> dict:
    if isinstance(k1, AggregateT) and k1.k == 0:
        return {k2.shift(k1.torus): rfv(1)}
    if isinstance(k2, AggregateT) and k2.k == 0:
        return {k1.shift(k2.torus): rfv(1)}
    alpha = k1.torus + k2.torus
    if isinstance(k1, AggregateA) and isinstance(k2, AggregateA) and k1.k == 0 and k2.k == 0:
        res = line_times_line(k1.s, k2.s)
    elif isinstance(k1, AggregateT) and isinstance(k2, AggregateA) and k2.k == 0:
        res = theta_times_line(k1.k, k2.s) * ((_Q - 1) * _v(k1.k - 1))
    elif isinstance(k1, AggregateA) and isinstance(k2, AggregateT) and k1.k == 0:
        res = line_times_theta(k1.s, k2.k) * ((_Q - 1) * _v(k2.k - 1))
    else:
        raise UnsupportedPair(f"no aggregate product rule for {k1} * {k2}")
    return {k.shift(alpha): c for k, c in res.terms.items()}


# ---------------------------------------------------------------------------
# numeric layer


def _num(q: int, terms) -> HallElement:
    return HallElement(dict(terms), q)


def _vq(q: int, n: int) -> QuadraticNumber:
    return specialize_v(LaurentPoly.monomial(1, n), q)


def _res(bundles=(), torsion: TorsionType = EMPTY_TORSION, torus: K0Class = ZERO_K0) -> Resolved:
    return Resolved(SheafClass(tuple(bundles), torsion), torus)


def _cyclic_counts(lam, qx: int, sub_is_cyclic: bool):
    """Yield (c, nu, weight): weight = (q_x^c - q_x^{c-1}) * g, where g counts
    cyclic submodules (c) with quotient nu, or submodules nu with cyclic quotient (c)."""
    for c in range(1, (lam[0] if lam else 0) + 1):
        epis = qx ** c - qx ** (c - 1)
        for nu in partitions(size(lam) - c):
            g = hall_number(lam, nu, (c,), qx) if sub_is_cyclic else hall_number(lam, (c,), nu, qx)
            if g:
                yield c, nu, epis * g


def line_times_torsion(r: int, x, lam, q: int) -> HallElement:
    """[O(r)] * [S_x^lam]: images of O(r) in S_x^lam are cyclic, kernels are O(r - c d_x)."""
    lam = tuple(lam)
    if not lam:
        return _num(q, {_res((r,)): 1})
    d = x.degree
    qx = q ** d
    pre = _vq(q, -d * size(lam))
    out = {_res((r,), single(x, lam)): pre}
    for c, nu, w in _cyclic_counts(lam, qx, True):
        key = _res((r - c * d,), single(x, nu), K0Class(0, c * d))
        out[key] = out.get(key, 0) + pre * w
    return _num(q, out)


def torsion_times_line(x, lam, r: int, q: int) -> HallElement:
    """[S_x^lam] * [O(r)]: middle terms O(r + c d_x) + S_x^nu with S_x^nu inside S_x^lam of cyclic cokernel."""
    lam = tuple(lam)
    if not lam:
        return _num(q, {_res((r,)): 1})
    d = x.degree
    qx = q ** d
    pre = _vq(q, -d * size(lam))
    out = {_res((r,), single(x, lam)): pre}
    for c, nu, w in _cyclic_counts(lam, qx, False):
        key = _res((r + c * d,), single(x, nu))
        out[key] = out.get(key, 0) + pre * w
    return _num(q, out)


def _append_torsion(h: HallElement, extra: TorsionType) -> HallElement:
    out = {}
    for k, c in h.terms.items():
        sh = k.sheaf
        out[Resolved(SheafClass(sh.bundles, sh.torsion.union(extra)), k.torus)] = c
    return HallElement(out, h.q)


def torsion_times_torsion(t1: TorsionType, t2: TorsionType, q: int) -> HallElement:
    """[S_t1] * [S_t2]: distinct points are orthogonal, shared points multiply in the Jordan algebra."""
    per_point = []
    for x in sorted(set(t1.support) | set(t2.support)):
        lam, mu = t1.at(x), t2.at(x)
        if lam and mu:
            local = i_product(lam, mu, q ** x.degree).terms
        else:
            local = {(lam or mu, 0): QuadraticNumber(1)}
        per_point.append((x, local))
    acc = {(EMPTY_TORSION, 0): QuadraticNumber(1)}
    for x, local in per_point:
        nxt: dict = {}
        for (tor, deg), c in acc.items():
            for (nu, a), s in local.items():
                key = (tor.union(single(x, nu)) if nu else tor, deg + a * x.degree)
                nxt[key] = nxt.get(key, 0) + c * s
        acc = nxt
    return _num(q, {_res((), tor, K0Class(0, deg)): c for (tor, deg), c in acc.items()})


def _rank_one(sheaf: SheafClass) -> bool:
    return sheaf.rank == 1


def _numeric_key_product(k1: Resolved, k2: Resolved, q: int) -> dict:
    m, n = k1.sheaf, k2.sheaf
    alpha = k1.torus + k2.torus
    if m.is_zero() or n.is_zero():
        return {Resolved(n if m.is_zero() else m, alpha): QuadraticNumber(1)}
    if m.is_torsion() and n.is_torsion():
        res = torsion_times_torsion(m.torsion, n.torsion, q)
    elif m.is_torsion() and _rank_one(n):
        if set(m.torsion.support) & set(n.torsion.support):
            raise UnsupportedPair(f"torsion * (line + torsion) with shared support: {m} * {n}")
        res = _num(q, {Resolved(SheafClass(n.bundles)): 1})
        for x, lam in reversed(m.torsion.items):
            res = _apply_left(x, lam, res, q)
        res = _append_torsion(res, n.torsion)
    elif _rank_one(m) and n.is_torsion():
        if set(m.torsion.support) & set(n.torsion.support):
            raise UnsupportedPair(f"(line + torsion) * torsion with shared support: {m} * {n}")
        res = _num(q, {Resolved(SheafClass(m.bundles)): 1})
        for x, lam in n.torsion.items:
            res = _apply_right(res, x, lam, q)
        res = _append_torsion(res, m.torsion)
    elif m.torsion.is_empty() and n.torsion.is_empty() and _rank_one(m) and _rank_one(n):
        res = expand(line_times_line(m.bundles[0], n.bundles[0]), q)
    else:
        raise UnsupportedPair(f"no product rule for {m} * {n}")
    return {k.shift(alpha): c for k, c in res.terms.items()}


def _apply_left(x, lam, h: HallElement, q: int) -> HallElement:
    """[S_x^lam] * h for h a combination of rank-one classes with torsion away from x."""
    out = HallElement.zero(q)
    for k, c in h.terms.items():
        (r,) = k.sheaf.bundles
        part = torsion_times_line(x, lam, r, q)
        out = out + _append_torsion(part, k.sheaf.torsion).torus_multiply(k.torus) * c
    return out


def _apply_right(h: HallElement, x, lam, q: int) -> HallElement:
    out = HallElement.zero(q)
    for k, c in h.terms.items():
        (r,) = k.sheaf.bundles
        part = line_times_torsion(r, x, lam, q)
        out = out + _append_torsion(part, k.sheaf.torsion).torus_multiply(k.torus) * c
    return out


@lru_cache(maxsize=None)
def _cached_key_product(k1, k2, q):
    if q is None:
        return tuple(_symbolic_key_product(k1, k2).items())
    return tuple(_numeric_key_product(k1, k2, q).items())


def key_product(k1, k2, q: int | None) -> dict:
    return dict(_cached_key_product(k1, k2, q))


# ---------------------------------------------------------------------------
# expansion and point-resolved generators


def expand(h: HallElement, q: int) -> HallElement:
    """Resolve aggregate symbols into individual sheaf classes at q."""
    if h.q is not None:
        raise LayerViolation("expand takes a symbolic element")
    out: dict = {}

    def add(key, c):
        out[key] = out[key] + c if key in out else c

    for key, c in h.terms.items():
        c = specialize_v(c, q)
        if isinstance(key, BundlePair):
            add(_res((key.a, key.b), EMPTY_TORSION, key.torus), c)
        elif isinstance(key, AggregateT):
            for prof in enumerate_cyclic_profiles(q, key.k):
                add(_res((), profile_torsion(prof), key.torus), c)
        else:
            for prof in enumerate_cyclic_profiles(q, key.k):
                add(_res((key.s,), profile_torsion(prof), key.torus), c)
    return HallElement(out, q)


def line_numeric(r: int, q: int) -> HallElement:
    return _num(q, {_res((r,)): 1})


def torsion_numeric(t: TorsionType, q: int) -> HallElement:
    return _num(q, {_res((), t): 1})


def theta_hat(m: int, q: int) -> HallElement:
    """Point-resolved Theta_m at q."""
    if m < 0:
        return HallElement.zero(q)
    if m == 0:
        return HallElement.one(q) * specialize_v(rfv(V - V ** -1).inverse(), q)
    coeff = specialize_v(((_Q - 1) * _v(m - 1)).inverse(), q)
    return _num(q, {_res((), profile_torsion(p)): coeff for p in enumerate_cyclic_profiles(q, m)})


def theta_hat_via_cokernels(m: int, s: int, p: int) -> HallElement:
    """Theta_m from the cokernels of all nonzero maps O(s) -> O(s+m), i.e. degree-m binary forms."""
    from .oracle import binary_form_census

    if m < 1:
        raise ValueError("m must be positive")
    if not isinstance(s, int):
        raise TypeError("s must be an integer")
    coeff = specialize_v(((_Q - 1) * (_Q - 1) * _v(m - 1)).inverse(), p)
    hist = binary_form_census(p, m)
    return _num(p, {_res((), profile_torsion(prof)): coeff * n for prof, n in hist.items()})


def h_hat(m: int, q: int) -> HallElement:
    """H_m: per point of degree d | m, ([m]/m) d sum_lam n_x(l(lam)-1) [S_x^lam]/|Aut|, minus the torus term."""
    if m < 1:
        raise ValueError("m must be positive")
    qm = specialize_v(quantum_integer(m), q) * Fraction(1, m)
    out: dict = {}
    for x in census(q, m).points():
        d = x.degree
        if m % d:
            continue
        qx = q ** d
        for lam in partitions(m // d):
            c = Fraction(n_factor(len(lam) - 1, qx), aut_partition(lam, qx)) * d
            out[_res((), single(x, lam))] = qm * c
    if m % 2 == 0:
        out[_res((), EMPTY_TORSION, K0Class(0, m // 2))] = -qm
    return _num(q, out)


# ---------------------------------------------------------------------------
# Drinfeld generators and their images


@dataclass(frozen=True)
class DrinfeldGenerator:
    name: str  # "K1", "C", "B", "Theta", "H"
    index: int | None = None

    def __post_init__(self):
        if self.name not in ("K1", "C", "B", "Theta", "H"):
            raise ValueError(f"unknown generator {self.name}")
        if self.name in ("B", "Theta", "H") and self.index is None:
            raise ValueError(f"{self.name} needs an index")


def omega_image(g: DrinfeldGenerator, q: int | None = None) -> HallElement:
    """Image under K1 -> K_O, C -> K_delta, B_{1,r} -> -[O(r)]/(q-1), Theta_m -> Theta_m, H_m -> H_m."""
    if g.name == "K1":
        return HallElement.torus(K0Class(1, 0), q)
    if g.name == "C":
        return HallElement.torus(K0Class(0, 1), q)
    if g.name == "B":
        base = line_symbolic(g.index) if q is None else line_numeric(g.index, q)
        return base * (-(_Q - 1).inverse())
    if g.name == "Theta":
        return theta_hat_symbolic(g.index) if q is None else theta_hat(g.index, q)
    if q is None:
        raise UnsupportedPair("H_m needs point resolution; pass q")
    return h_hat(g.index, q)
