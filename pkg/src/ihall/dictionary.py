"""Generator dictionary between the Kronecker quiver side and the projective line.

Kronecker classes live in the lattice with coordinates (a0, a1) for
a0*alpha_0 + a1*alpha_1, and delta = alpha_0 + alpha_1.  Indecomposable
preprojective and preinjective modules are determined by their dimension
vectors: P(n) has dimension n*delta + alpha_1 and I(n) has n*delta + alpha_0,
so P(0) = S1 and I(0) = S0.  Only single terms scalar * [module] * [K_beta]
are modelled; there is no Kronecker Hall product here.
"""
from __future__ import annotations

from dataclasses import dataclass

from .hall import DrinfeldGenerator, HallElement, line_symbolic, omega_image
from .report import Report
from .scalars import RationalFunctionV, V, rfv
from .sheaves import K0Class, k0_class, line

_v = rfv(V)
_q = _v * _v
_B_SCALAR = -(_q - 1).inverse()

Lattice = tuple[int, int]
DELTA: Lattice = (1, 1)


class DomainViolation(ValueError):
    pass


class UnsupportedGenerator(ValueError):
    pass


@dataclass(frozen=True)
class KronGenerator:
    """S0, S1, P(n), I(n) or the torus class K(beta); P(0)/I(0) normalize to S1/S0."""

    kind: str
    index: int | Lattice = 0

    def __post_init__(self):
        if self.kind not in ("S0", "S1", "P", "I", "K"):
            raise ValueError(f"unknown Kronecker generator {self.kind!r}")
        if self.kind in ("P", "I"):
            if not isinstance(self.index, int) or self.index < 0:
                raise ValueError("P(n)/I(n) need n >= 0")
            if self.index == 0:
                object.__setattr__(self, "kind", "S1" if self.kind == "P" else "S0")
        elif self.kind == "K":
            a0, a1 = self.index
            object.__setattr__(self, "index", (int(a0), int(a1)))
        else:
            object.__setattr__(self, "index", 0)

    @property
    def is_module(self) -> bool:
        return self.kind != "K"

    def dim(self) -> Lattice:
        if self.kind == "S0":
            return (1, 0)
        if self.kind == "S1":
            return (0, 1)
        if self.kind == "P":
            return (self.index, self.index + 1)
        if self.kind == "I":
            return (self.index + 1, self.index)
        raise DomainViolation("torus classes have no dimension vector")

    def __str__(self):
        if self.kind in ("P", "I"):
            return f"{self.kind}{self.index}"
        if self.kind == "K":
            return f"K{self.index}"
        return self.kind


S0 = KronGenerator("S0")
S1 = KronGenerator("S1")


def P(n: int) -> KronGenerator:
    return KronGenerator("P", n)


def I(n: int) -> KronGenerator:  # noqa: E743
    return KronGenerator("I", n)


def module_from_dim(d: Lattice) -> KronGenerator:
    """The indecomposable preprojective or preinjective module of dimension d."""
    a0, a1 = d
    if a0 >= 0 and a1 == a0 + 1:
        return P(a0)
    if a1 >= 0 and a0 == a1 + 1:
        return I(a1)
    raise DomainViolation(f"{d} is not the dimension of a preprojective or preinjective module")


def _add(a: Lattice, b: Lattice) -> Lattice:
    return (a[0] + b[0], a[1] + b[1])


def lattice_plus(b: Lattice) -> Lattice:
    """Simple reflection at vertex 1 followed by the vertex swap."""
    a0, a1 = b
    return (2 * a0 - a1, a0)


def lattice_minus(b: Lattice) -> Lattice:
    """Simple reflection at vertex 0 followed by the vertex swap."""
    b0, b1 = b
    return (b1, 2 * b1 - b0)


@dataclass(frozen=True)
class DictionaryElement:
    """scalar * [generator] * [K_torus]; generator None means the unit."""

    scalar: RationalFunctionV
    generator: KronGenerator | None = None
    torus: Lattice = (0, 0)

    def __post_init__(self):
        object.__setattr__(self, "scalar", rfv(self.scalar))
        g = self.generator
        if g is not None and not g.is_module:
            object.__setattr__(self, "generator", None)
            object.__setattr__(self, "torus", _add(self.torus, g.index))

    @classmethod
    def of(cls, g: KronGenerator, scalar=1) -> "DictionaryElement":
        return cls(rfv(scalar), g)

    def times_torus(self, beta: Lattice) -> "DictionaryElement":
        return DictionaryElement(self.scalar, self.generator, _add(self.torus, beta))

    def __mul__(self, c) -> "DictionaryElement":
        return DictionaryElement(self.scalar * rfv(c), self.generator, self.torus)

    __rmul__ = __mul__

    def dim(self) -> Lattice:
        return (0, 0) if self.generator is None else self.generator.dim()

    def __str__(self):
        base = "1" if self.generator is None else f"[{self.generator}]"
        tor = "" if self.torus == (0, 0) else f"*K{self.torus}"
        return f"({self.scalar}) {base}{tor}"


def psi_image(name: str) -> DictionaryElement:
    """B_i -> -[S_i]/(q-1), K_i -> [K_{S_i}]."""
    table = {
        "B0": DictionaryElement(_B_SCALAR, S0),
        "B1": DictionaryElement(_B_SCALAR, S1),
        "K0": DictionaryElement(rfv(1), None, (1, 0)),
        "K1": DictionaryElement(rfv(1), None, (0, 1)),
    }
    if name not in table:
        raise UnsupportedGenerator(f"unknown Serre generator {name!r}")
    return table[name]


def reflect_plus(e: DictionaryElement) -> DictionaryElement:
    torus = lattice_plus(e.torus)
    g = e.generator
    if g is None:
        return DictionaryElement(e.scalar, None, torus)
    if g == S1:
        return DictionaryElement(e.scalar, S0, _add(torus, (-1, 0)))
    return DictionaryElement(e.scalar, module_from_dim(lattice_plus(g.dim())), torus)


def reflect_minus(e: DictionaryElement) -> DictionaryElement:
    torus = lattice_minus(e.torus)
    g = e.generator
    if g is None:
        return DictionaryElement(e.scalar, None, torus)
    if g == S0:
        return DictionaryElement(e.scalar, S1, _add(torus, (0, -1)))
    return DictionaryElement(e.scalar, module_from_dim(lattice_minus(g.dim())), torus)


def b_image(n: int, sign: int = 1) -> DictionaryElement:
    """Image of B_{n delta + alpha_1} (sign +1) or B_{-(n+1) delta + alpha_1} (sign -1).

    Built by iterating the reflections from the image of B1; each step's
    dimension vector is checked against the expected root.
    """
    if n < 0 or sign not in (1, -1):
        raise ValueError("need n >= 0 and sign = +1 or -1")
    e = psi_image("B1")
    if sign == 1:
        for k in range(1, n + 1):
            e = reflect_minus(e)
            if e.dim() != (k, k + 1) or e.torus != (0, 0):
                raise AssertionError(f"step {k} landed on {e}")
        return e
    for k in range(n + 1):
        e = reflect_plus(e)
        if e.dim() != (k + 1, k) or e.torus != (-k - 1, -k):
            raise AssertionError(f"step {k} landed on {e}")
    return e


def lattice_to_k0(beta: Lattice) -> K0Class:
    """alpha_1 -> (1, 0) = class of O and alpha_0 -> (-1, 1)."""
    a0, a1 = beta
    return K0Class(a1 - a0, a0)


def _gamma_s0() -> HallElement:
    """[S0] = [M]*[K_{S1^2}]^{-1} where M is the complex on P(1) + S1^2 with differential f.

    Its preimage is the complex on O(1) + O^2 with the surjection h, which
    reduces to [ker h]*[K_{O(1)}]; ker h is the line bundle of class
    2*[O] - [O(1)], and K_{S1^2} maps to 2*[O].
    """
    o, o1 = k0_class(line(0)), k0_class(line(1))
    kernel = 2 * o - o1
    if kernel.rank != 1:
        raise AssertionError("kernel of O^2 -> O(1) must be a line bundle")
    return line_symbolic(kernel.degree).torus_multiply(o1 - 2 * o)


def gamma_generator(g: KronGenerator) -> HallElement:
    if g == S1:
        return line_symbolic(0)
    if g == P(1):
        return line_symbolic(1)
    if g == S0:
        return _gamma_s0()
    if g.kind == "K":
        return HallElement.torus(lattice_to_k0(g.index))
    raise UnsupportedGenerator(f"no image recorded for {g}")


def gamma_image(e: DictionaryElement | KronGenerator) -> HallElement:
    if isinstance(e, KronGenerator):
        e = DictionaryElement.of(e)
    base = HallElement.one() if e.generator is None else gamma_generator(e.generator)
    return base.torus_multiply(lattice_to_k0(e.torus)) * e.scalar


# Phi^{-1} on Serre generators as (scalar, [(Drinfeld generator, power)])
_PHI_INVERSE = {
    "B0": [(DrinfeldGenerator("B", -1), 1), (DrinfeldGenerator("C"), 1), (DrinfeldGenerator("K1"), -1)],
    "B1": [(DrinfeldGenerator("B", 0), 1)],
    "K0": [(DrinfeldGenerator("C"), 1), (DrinfeldGenerator("K1"), -1)],
    "K1": [(DrinfeldGenerator("K1"), 1)],
}

_TORUS_CLASS = {"K1": K0Class(1, 0), "C": K0Class(0, 1)}


def omega_of_monomial(factors) -> HallElement:
    """Omega applied to an ordered product of Drinfeld generators; torus ones may be inverted."""
    out = HallElement.one()
    for g, power in factors:
        if g.name in _TORUS_CLASS:
            alpha = _TORUS_CLASS[g.name]
            out = out.torus_multiply(K0Class(alpha.rank * power, alpha.degree * power))
        elif power >= 0:
            for _ in range(power):
                out = out * omega_image(g)
        else:
            raise UnsupportedGenerator(f"cannot invert {g.name}")
    return out


def diagram_sides(name: str) -> tuple[HallElement, HallElement]:
    """(Omega(Phi^{-1}(g)), G(psi(g))) for a Serre generator g."""
    if name not in _PHI_INVERSE:
        raise UnsupportedGenerator(f"unknown Serre generator {name!r}")
    return omega_of_monomial(_PHI_INVERSE[name]), gamma_image(psi_image(name))


def verify_diagram() -> Report:
    rep = Report("diagram", {})
    for name in ("B0", "B1", "K0", "K1"):
        rep.zero_check(name, lambda name=name: diagram_sides(name)[0] - diagram_sides(name)[1])
    return rep


def verify_reflections(n_max: int = 6) -> Report:
    """Reflections are mutually inverse and produce the expected root images."""
    rep = Report("reflections", {"n_max": n_max})
    samples = [DictionaryElement.of(g) for g in [S0, S1] + [P(n) for n in range(1, n_max + 1)] + [I(n) for n in range(1, n_max + 1)]]
    samples += [DictionaryElement(rfv(1), None, b) for b in [(1, 0), (0, 1), (2, -3)]]
    for e in samples:
        rep.check(f"minus(plus({e}))", reflect_minus(reflect_plus(e)) == e, [str(reflect_minus(reflect_plus(e)))])
        rep.check(f"plus(minus({e}))", reflect_plus(reflect_minus(e)) == e, [str(reflect_plus(reflect_minus(e)))])
    for n in range(n_max + 1):
        for sign, want in ((1, DictionaryElement(_B_SCALAR, P(n))), (-1, DictionaryElement(_B_SCALAR, I(n), (-n - 1, -n)))):
            got = b_image(n, sign)
            rep.check(f"b_image({n},{sign:+d})", got == want, [f"{got} != {want}"])
    return rep
