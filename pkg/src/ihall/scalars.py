"""Exact scalars: Laurent polynomials and rational functions in v, the
quadratic field Q(sqrt q), quantum integers and truncated power series.

Everything here is immutable and uses ``fractions.Fraction``; there is no
floating point anywhere in the package.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence, Union

Rational = Union[int, Fraction]


class NonUnitConstantTerm(ValueError):
    """Raised when exp/log is applied to a series with the wrong constant term."""


class PoleAtSqrtQ(ZeroDivisionError):
    """Raised when a rational function is specialized at a root of its denominator."""


# ---------------------------------------------------------------------------
# dense polynomial helpers (coefficient lists, index = degree)


def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a: list, b: list) -> tuple[list, list]:
    a = list(a)
    lead = b[-1]
    quot = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        c = a[-1] / lead
        quot[shift] = c
        for i, bc in enumerate(b):
            a[i + shift] -= c * bc
        _trim(a)
    return quot, a


def _poly_gcd(a: list, b: list) -> list:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    lead = a[-1]
    return [c / lead for c in a]


# ---------------------------------------------------------------------------


class LaurentPoly:
    """Finite sum of c_n v^n with rational c_n (zero coefficients never stored)."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, Rational] | None = None):
        c = {}
        if coeffs:
            for e, a in coeffs.items():
                if a != 0:
                    c[int(e)] = Fraction(a)
        self._c = c
        self._hash = None

    @classmethod
    def monomial(cls, coeff: Rational = 1, exp: int = 0) -> "LaurentPoly":
        return cls({exp: coeff})

    @classmethod
    def coerce(cls, x) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return cls({0: x})
        raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")

    # -- inspection
    def items(self):
        return sorted(self._c.items())

    def coefficient(self, exp: int) -> Fraction:
        return self._c.get(exp, Fraction(0))

    def is_zero(self) -> bool:
        return not self._c

    def min_exp(self) -> int:
        return min(self._c)

    def max_exp(self) -> int:
        return max(self._c)

    def is_constant(self) -> bool:
        return not self._c or set(self._c) == {0}

    # -- arithmetic
    def __add__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        c = dict(self._c)
        for e, a in other._c.items():
            c[e] = c.get(e, 0) + a
        return LaurentPoly(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -a for e, a in self._c.items()})

    def __sub__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return LaurentPoly({e: a * other for e, a in self._c.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        c: dict[int, Fraction] = {}
        for e1, a1 in self._c.items():
            for e2, a2 in other._c.items():
                c[e1 + e2] = c.get(e1 + e2, 0) + a1 * a2
        return LaurentPoly(c)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._c) != 1:
                raise ValueError("negative powers only for monomials")
            (e, a), = self._c.items()
            return LaurentPoly({e * n: a ** n})
        out = LaurentPoly({0: 1})
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by v^k."""
        return LaurentPoly({e + k: a for e, a in self._c.items()})

    def bar(self) -> "LaurentPoly":
        """The involution v -> v^{-1}."""
        return LaurentPoly({-e: a for e, a in self._c.items()})

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.coerce(other)
        if isinstance(other, RationalFunctionV):
            return RationalFunctionV(self) == other
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for e, a in sorted(self._c.items(), reverse=True):
            mono = "" if e == 0 else ("v" if e == 1 else f"v^{e}")
            if not mono:
                s = str(a)
            elif a == 1:
                s = mono
            elif a == -1:
                s = "-" + mono
            else:
                s = f"{a}*{mono}"
            parts.append(s)
        out = parts[0]
        for s in parts[1:]:
            out += " - " + s[1:] if s.startswith("-") else " + " + s
        return out

    def __repr__(self):
        return f"LaurentPoly({self})"


V = LaurentPoly({1: 1})


def _to_dense(p: LaurentPoly, low: int) -> list:
    """Coefficient list of v^{-low} * p."""
    out = [Fraction(0)] * (p.max_exp() - low + 1)
    for e, a in p.items():
        out[e - low] = a
    return out


class RationalFunctionV:
    """A normalized element of Q(v).

    Canonical form: numerator a Laurent polynomial, denominator a monic
    polynomial with nonzero constant term, coprime to the numerator.
    Equal values therefore have identical representations.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1, *, _normalized: bool = False):
        num = LaurentPoly.coerce(num)
        den = LaurentPoly.coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not _normalized:
            num, den = self._normalize(num, den)
        self.num = num
        self.den = den
        self._hash = None

    @staticmethod
    def _normalize(num: LaurentPoly, den: LaurentPoly):
        if num.is_zero():
            return num, LaurentPoly({0: 1})
        if len(den._c) == 1:
            (e, a), = den._c.items()
            return LaurentPoly({k - e: c / a for k, c in num._c.items()}), LaurentPoly({0: 1})
        dlow, nlow = den.min_exp(), num.min_exp()
        d = _to_dense(den, dlow)
        n = _to_dense(num, nlow)
        g = _poly_gcd(n, d)
        if len(g) > 1:
            n, _ = _poly_divmod(n, g)
            d, _ = _poly_divmod(d, g)
        lead = d[-1]
        n = [c / lead for c in n]
        d = [c / lead for c in d]
        shift = nlow - dlow
        return (
            LaurentPoly({i + shift: c for i, c in enumerate(n)}),
            LaurentPoly({i: c for i, c in enumerate(d)}),
        )

    @classmethod
    def coerce(cls, x) -> "RationalFunctionV":
        if isinstance(x, RationalFunctionV):
            return x
        return cls(x)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_laurent(self) -> bool:
        return self.den.is_constant()

    def as_laurent(self) -> LaurentPoly:
        if not self.is_laurent():
            raise ValueError(f"{self} is not a Laurent polynomial")
        return self.num

    def __add__(self, other):
        try:
            other = RationalFunctionV.coerce(other)
        except TypeError:
            return NotImplemented
        if self.den == other.den:
            return RationalFunctionV(self.num + other.num, self.den)
        return RationalFunctionV(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunctionV(-self.num, self.den, _normalized=True)

    def __sub__(self, other):
        try:
            other = RationalFunctionV.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return RationalFunctionV(0)
            return RationalFunctionV(self.num * other, self.den, _normalized=True)
        try:
            other = RationalFunctionV.coerce(other)
        except TypeError:
            return NotImplemented
        return RationalFunctionV(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunctionV":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RationalFunctionV(self.den, self.num)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return RationalFunctionV(self.num * (Fraction(1) / other), self.den, _normalized=True)
        try:
            other = RationalFunctionV.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return RationalFunctionV.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return RationalFunctionV(self.num ** n, self.den ** n)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly)):
            other = RationalFunctionV(other)
        if not isinstance(other, RationalFunctionV):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __str__(self):
        if self.den == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RationalFunctionV({self})"


def rfv(x) -> RationalFunctionV:
    """Shorthand coercion into Q(v)."""
    return RationalFunctionV.coerce(x)


# the symbolic quantum parameter and q = v^2
v = RationalFunctionV(V, _normalized=True)
q_sym = RationalFunctionV(LaurentPoly({2: 1}), _normalized=True)


# ---------------------------------------------------------------------------


def _squarefree(n: int) -> tuple[int, int]:
    """Return (k, s) with n = k^2 * s and s squarefree."""
    k, s = 1, 1
    m, p = n, 2
    while p * p <= m:
        while m % (p * p) == 0:
            m //= p * p
            k *= p
        if m % p == 0:
            m //= p
            s *= p
        p += 1
    return k, s * m


class QuadraticNumber:
    """An exact element a + b*sqrt(s) of Q(sqrt q).

    The radicand is stored squarefree (sqrt(q) = k*sqrt(s) is absorbed into
    b); rationals carry radicand 1. So Q(sqrt(q^d)) for odd d embeds in
    Q(sqrt q) without any special casing.
    """

    __slots__ = ("a", "b", "radicand")

    def __init__(self, a: Rational = 0, b: Rational = 0, radicand: int = 1):
        if radicand < 1:
            raise ValueError("radicand must be positive")
        a, b = Fraction(a), Fraction(b)
        k, s = _squarefree(radicand)
        b *= k
        if s == 1:
            a, b = a + b, Fraction(0)
        if b == 0:
            s = 1
        self.a, self.b, self.radicand = a, b, s

    @classmethod
    def sqrt(cls, q: int) -> "QuadraticNumber":
        return cls(0, 1, q)

    @classmethod
    def coerce(cls, x) -> "QuadraticNumber":
        if isinstance(x, QuadraticNumber):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to QuadraticNumber")

    def _common(self, other: "QuadraticNumber") -> int:
        if self.radicand == 1:
            return other.radicand
        if other.radicand in (1, self.radicand):
            return self.radicand
        raise ValueError(f"incompatible radicands {self.radicand} and {other.radicand}")

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_rational(self) -> bool:
        return self.b == 0

    def __add__(self, other):
        try:
            other = QuadraticNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return QuadraticNumber(self.a + other.a, self.b + other.b, self._common(other))

    __radd__ = __add__

    def __neg__(self):
        return QuadraticNumber(-self.a, -self.b, self.radicand)

    def __sub__(self, other):
        try:
            other = QuadraticNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QuadraticNumber(self.a * other, self.b * other, self.radicand)
        if not isinstance(other, QuadraticNumber):
            return NotImplemented
        s = self._common(other)
        return QuadraticNumber(
            self.a * other.a + self.b * other.b * s,
            self.a * other.b + self.b * other.a,
            s,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadraticNumber":
        norm = self.a * self.a - self.b * self.b * self.radicand
        if norm == 0:
            raise ZeroDivisionError("inverse of zero")
        return QuadraticNumber(self.a / norm, -self.b / norm, self.radicand)

    def __truediv__(self, other):
        try:
            other = QuadraticNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return QuadraticNumber.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = QuadraticNumber(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if not isinstance(other, QuadraticNumber):
            return NotImplemented
        return (self.a, self.b, self.radicand) == (other.a, other.b, other.radicand)

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.radicand))

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        mag = abs(self.b)
        surd = f"sqrt({self.radicand})" if mag == 1 else f"{mag}*sqrt({self.radicand})"
        if self.a == 0:
            return surd if self.b > 0 else "-" + surd
        return f"{self.a} {'+' if self.b > 0 else '-'} {surd}"

    def __repr__(self):
        return f"QuadraticNumber({self})"


def _v_power(q: int, n: int) -> QuadraticNumber:
    """sqrt(q)^n in Q(sqrt q)."""
    even = Fraction(q) ** (n // 2)
    return QuadraticNumber(0, even, q) if n % 2 else QuadraticNumber(even)


def specialize_v(f, q: int) -> QuadraticNumber:
    """Evaluate an element of Q(v) at v = sqrt(q)."""
    if isinstance(f, (int, Fraction)):
        return QuadraticNumber(f)
    if isinstance(f, LaurentPoly):
        out = QuadraticNumber(0)
        for e, a in f.items():
            out = out + _v_power(q, e) * a
        return out
    if isinstance(f, RationalFunctionV):
        den = specialize_v(f.den, q)
        if den.is_zero():
            raise PoleAtSqrtQ(f"{f} has a pole at v = sqrt({q})")
        return specialize_v(f.num, q) / den
    raise TypeError(f"cannot specialize {type(f).__name__}")


def quantum_integer(n: int) -> LaurentPoly:
    """[n] = (v^n - v^{-n}) / (v - v^{-1})."""
    if n < 0:
        return -quantum_integer(-n)
    return LaurentPoly({n - 1 - 2 * i: 1 for i in range(n)})


def quantum_factorial(n: int) -> LaurentPoly:
    out = LaurentPoly({0: 1})
    for i in range(1, n + 1):
        out = out * quantum_integer(i)
    return out


def quantum_binomial(n: int, r: int) -> RationalFunctionV:
    """[n][n-1]...[n-r+1] / [r]!"""
    if r < 0:
        raise ValueError("r must be nonnegative")
    num = LaurentPoly({0: 1})
    for i in range(r):
        num = num * quantum_integer(n - i)
    return RationalFunctionV(num, quantum_factorial(r))


# ---------------------------------------------------------------------------


def _is_zero(x) -> bool:
    return x == 0


class TruncatedSeries:
    """Power series sum_{i<=order} c_i z^i over a commutative ring.

    Coefficients may be any objects supporting +, -, * and multiplication by
    ``Fraction``; callers supply the ring's zero for padding.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence, order: int, zero=Fraction(0)):
        if order < 0:
            raise ValueError("order must be nonnegative")
        cs = list(coeffs[: order + 1])
        cs += [zero] * (order + 1 - len(cs))
        self.order = order
        self.coeffs = tuple(cs)

    def __getitem__(self, i: int):
        return self.coeffs[i]

    def _check(self, other: "TruncatedSeries"):
        if self.order != other.order:
            raise ValueError("series orders differ")

    def __add__(self, other: "TruncatedSeries"):
        self._check(other)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __sub__(self, other: "TruncatedSeries"):
        self._check(other)
        return TruncatedSeries([a - b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries([c * other for c in self.coeffs], self.order)
        self._check(other)
        out = []
        for n in range(self.order + 1):
            acc = self.coeffs[0] * other.coeffs[n]
            for k in range(1, n + 1):
                acc = acc + self.coeffs[k] * other.coeffs[n - k]
            out.append(acc)
        return TruncatedSeries(out, self.order)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __repr__(self):
        return "TruncatedSeries(" + ", ".join(str(c) for c in self.coeffs) + ")"


def assert_pairwise_commute(items: Iterable, mul: Callable = lambda a, b: a * b) -> None:
    items = list(items)
    for i, a in enumerate(items):
        for b in items[i + 1 :]:
            if not mul(a, b) == mul(b, a):
                raise ValueError("series coefficients do not commute")


def series_exp(s: TruncatedSeries, one=Fraction(1), check_commutative: bool = False) -> TruncatedSeries:
    """exp of a series with zero constant term.

    Uses n f_n = sum_k k g_k f_{n-k}, valid when the coefficients commute.
    """
    if not _is_zero(s[0]):
        raise NonUnitConstantTerm("exp needs constant term 0")
    if check_commutative:
        assert_pairwise_commute(s.coeffs[1:])
    f = [one]
    for n in range(1, s.order + 1):
        acc = None
        for k in range(1, n + 1):
            term = (s[k] * f[n - k]) * k
            acc = term if acc is None else acc + term
        f.append(acc * Fraction(1, n))
    return TruncatedSeries(f, s.order)


def series_log(s: TruncatedSeries, one=Fraction(1), check_commutative: bool = False) -> TruncatedSeries:
    """log of a series with constant term one."""
    if not s[0] == one:
        raise NonUnitConstantTerm("log needs constant term 1")
    if check_commutative:
        assert_pairwise_commute(s.coeffs[1:])
    zero = one * 0
    g = [zero]
    for n in range(1, s.order + 1):
        acc = s[n] * n
        for k in range(1, n):
            acc = acc - (g[k] * s[n - k]) * k
        g.append(acc * Fraction(1, n))
    return TruncatedSeries(g, s.order)
