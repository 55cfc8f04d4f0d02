"""Closed points of the projective line over F_q.

Points are symbolic: a ``PointIndex`` is (degree, index) with the index
running over 1..N_d.  Only the oracle needs explicit polynomials, and those
come from :func:`enumerate_closed_points` over prime fields.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator

from .report import Report


class UnsupportedField(ValueError):
    pass


def prime_factorization(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and prime_factorization(n) == {n: 1}


def is_prime_power(n: int) -> bool:
    return n >= 2 and len(prime_factorization(n)) == 1


@dataclass(frozen=True)
class GroundField:
    q: int

    def __post_init__(self):
        if not isinstance(self.q, int) or not is_prime_power(self.q):
            raise ValueError(f"{self.q!r} is not a prime power")

    @property
    def characteristic(self) -> int:
        return next(iter(prime_factorization(self.q)))


@dataclass(frozen=True, order=True)
class PointIndex:
    degree: int
    index: int

    def __str__(self):
        return f"x{self.degree}.{self.index}"


def _mobius(n: int) -> int:
    f = prime_factorization(n)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def monic_irreducible_count(q: int, d: int) -> int:
    """Necklace count of monic irreducible polynomials of degree d over F_q."""
    total = sum(_mobius(e) * q ** (d // e) for e in _divisors(d))
    assert total % d == 0
    return total // d


def count_points(q: int, d: int) -> int:
    """N_d: closed points of degree d on P^1 over F_q."""
    if d < 1:
        raise ValueError("degree must be positive")
    if d == 1:
        return q + 1
    return monic_irreducible_count(q, d)


@dataclass(frozen=True)
class PointCensus:
    q: int
    counts: tuple[int, ...]

    def n(self, d: int) -> int:
        return self.counts[d - 1]

    def points(self, max_degree: int | None = None) -> tuple[PointIndex, ...]:
        top = len(self.counts) if max_degree is None else max_degree
        return tuple(PointIndex(d, i) for d in range(1, top + 1) for i in range(1, self.n(d) + 1))


@lru_cache(maxsize=None)
def census(q: int, bound: int) -> PointCensus:
    GroundField(q)
    return PointCensus(q, tuple(count_points(q, d) for d in range(1, bound + 1)))


def verify_zeta_identity(q: int, n_max: int) -> Report:
    rep = Report("zeta", {"q": q, "n_max": n_max})
    c = census(q, n_max)
    for n in range(1, n_max + 1):
        lhs = sum(d * c.n(d) for d in _divisors(n))
        rep.check(f"q={q},n={n}", lhs == q ** n + 1, [] if lhs == q ** n + 1 else [f"{lhs} != {q ** n + 1}"])
    return rep


# ---------------------------------------------------------------------------
# explicit points over prime fields (oracle side)

INFINITY = "inf"


def _poly_mod(a: tuple[int, ...], b: tuple[int, ...], p: int) -> tuple[int, ...]:
    """Remainder of a by monic b over F_p; coefficient tuples, index = degree."""
    a = list(a)
    db = len(b) - 1
    while len(a) - 1 >= db and any(a):
        if a[-1] == 0:
            a.pop()
            continue
        c = a[-1]
        shift = len(a) - 1 - db
        for i, bc in enumerate(b):
            a[i + shift] = (a[i + shift] - c * bc) % p
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


@lru_cache(maxsize=None)
def monic_irreducibles(p: int, d: int) -> tuple[tuple[int, ...], ...]:
    """Monic irreducibles of degree d over F_p, in lexicographic order of
    their low-to-high coefficient tuples."""
    if not is_prime(p):
        raise UnsupportedField(f"explicit points need a prime field, got q={p}")
    smaller = [f for e in range(1, d // 2 + 1) for f in monic_irreducibles(p, e)]
    out = []
    for low in product(range(p), repeat=d):
        f = tuple(low) + (1,)
        if all(_poly_mod(f, g, p) for g in smaller):
            out.append(f)
    return tuple(out)


def enumerate_closed_points(p: int, d_max: int) -> list[tuple[PointIndex, object]]:
    """Closed points of degree <= d_max with their defining data.

    Degree-1 points are X1 + a*X0 (stored as the monic (a, 1)) plus the point
    at infinity X0 (stored as ``INFINITY``, listed last).  Higher-degree
    points are monic irreducible f(X1) (homogenised with X0).
    """
    if not is_prime(p):
        raise UnsupportedField(f"explicit points need a prime field, got q={p}")
    out: list[tuple[PointIndex, object]] = []
    for d in range(1, d_max + 1):
        polys: list[object] = list(monic_irreducibles(p, d))
        if d == 1:
            polys.append(INFINITY)
        assert len(polys) == count_points(p, d)
        out.extend((PointIndex(d, i + 1), f) for i, f in enumerate(polys))
    return out


def format_point(data: object) -> str:
    """Binary-form rendering, e.g. X1^2 + X1*X0 + X0^2."""
    if data == INFINITY:
        return "X0"
    f = data
    d = len(f) - 1
    terms = []
    for i in range(d, -1, -1):
        c = f[i]
        if c == 0:
            continue
        mono = "*".join(
            s for s in (
                ("X1" if i == 1 else f"X1^{i}") if i else "",
                ("X0" if d - i == 1 else f"X0^{d - i}") if d - i else "",
            ) if s
        )
        terms.append(mono if c == 1 else f"{c}*{mono}")
    return " + ".join(terms)


# ---------------------------------------------------------------------------
# profiles and torsion types (symbolic)


def partitions(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of n as weakly decreasing tuples, in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def _assignments(points, m, choices):
    """Assign to distinct points (in canonical order) labels from choices(point, budget)
    so that the total weight is m.  choices yields (label, weight)."""
    def rec(start, remaining):
        if remaining == 0:
            yield ()
            return
        for j in range(start, len(points)):
            x = points[j]
            if x.degree > remaining:
                break
            for label, weight in choices(x, remaining):
                for rest in rec(j + 1, remaining - weight):
                    yield ((x, label),) + rest
    return rec(0, m)


def enumerate_cyclic_profiles(q: int, m: int) -> list[tuple[tuple[PointIndex, int], ...]]:
    """All n: points -> positive integers with sum d_x n_x = m, canonically ordered."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m == 0:
        return [()]
    pts = census(q, m).points()

    def choices(x, budget):
        for n in range(1, budget // x.degree + 1):
            yield n, n * x.degree

    return list(_assignments(pts, m, choices))


def enumerate_torsion_types(q: int, m: int):
    """All torsion types of total degree m (as TorsionType values)."""
    from .sheaves import TorsionType

    if m < 0:
        raise ValueError("m must be nonnegative")
    if m == 0:
        return [TorsionType(())]
    pts = census(q, m).points()

    def choices(x, budget):
        for n in range(1, budget // x.degree + 1):
            for lam in partitions(n):
                yield lam, n * x.degree

    return [TorsionType(a) for a in _assignments(pts, m, choices)]
