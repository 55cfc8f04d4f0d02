import pytest

from ihall.dictionary import (
    DictionaryElement,
    DomainViolation,
    I,
    KronGenerator,
    P,
    S0,
    S1,
    UnsupportedGenerator,
    b_image,
    diagram_sides,
    gamma_image,
    lattice_minus,
    lattice_plus,
    module_from_dim,
    psi_image,
    reflect_minus,
    reflect_plus,
    verify_diagram,
    verify_reflections,
)
from ihall.hall import HallElement, line_symbolic
from ihall.scalars import V, rfv
from ihall.sheaves import K0Class

v = rfv(V)
B = -(v * v - 1).inverse()


def test_generator_dimensions():
    assert P(0) == S1 and I(0) == S0
    assert P(3).dim() == (3, 4)
    assert I(2).dim() == (3, 2)
    assert module_from_dim((4, 5)) == P(4)
    with pytest.raises(DomainViolation):
        module_from_dim((1, 1))
    with pytest.raises(DomainViolation):
        KronGenerator("K", (1, 0)).dim()


def test_psi_images():
    assert psi_image("B1") == DictionaryElement(B, S1)
    assert psi_image("K0") == DictionaryElement(1, None, (1, 0))
    assert psi_image("B0") * 2 == DictionaryElement(2 * B, S0)
    with pytest.raises(UnsupportedGenerator):
        psi_image("B2")


def test_reflection_special_rules():
    k = lambda a: DictionaryElement(1, None, a)
    assert reflect_plus(k((0, 1))) == k((-1, 0))
    assert reflect_plus(k((1, 0))) == k((2, 1))
    assert reflect_minus(k((0, 1))) == k((1, 2))
    assert reflect_minus(k((1, 0))) == k((0, -1))
    assert reflect_plus(DictionaryElement.of(S1)) == DictionaryElement(1, S0, (-1, 0))
    assert reflect_minus(DictionaryElement.of(S0)) == DictionaryElement(1, S1, (0, -1))
    assert reflect_minus(reflect_plus(k((1, 0)))) == k((1, 0))


@pytest.mark.parametrize("beta", [(0, 0), (1, 0), (0, 1), (3, -2), (-4, 7)])
def test_lattice_maps_are_inverse_reflections(beta):
    assert lattice_minus(lattice_plus(beta)) == beta
    assert lattice_plus(lattice_minus(beta)) == beta
    # both preserve the symmetric form (a0 - a1)^2
    a0, a1 = lattice_plus(beta)
    assert (a0 - a1) ** 2 == (beta[0] - beta[1]) ** 2


def test_root_images():
    assert b_image(0) == DictionaryElement(B, P(0))
    assert b_image(0, -1) == DictionaryElement(B, I(0), (-1, 0))
    assert b_image(2).dim() == (2, 3)
    assert b_image(3, -1) == DictionaryElement(B, I(3), (-4, -3))
    assert verify_reflections(5).passed


def test_gamma_images():
    assert gamma_image(S1) == line_symbolic(0)
    assert gamma_image(P(1)) == line_symbolic(1)
    assert gamma_image(S0) == line_symbolic(-1).torus_multiply(K0Class(-1, 1))
    assert gamma_image(KronGenerator("K", (1, 0))) == HallElement.torus(K0Class(-1, 1))
    assert gamma_image(KronGenerator("K", (0, 1))) == HallElement.torus(K0Class(1, 0))
    with pytest.raises(UnsupportedGenerator):
        gamma_image(I(2))


def test_diagram_commutes():
    rep = verify_diagram()
    assert rep.passed and len(rep.cases) == 4
    lhs, rhs = diagram_sides("B0")
    assert lhs == rhs == line_symbolic(-1).torus_multiply(K0Class(-1, 1)) * B
    lhs, rhs = diagram_sides("K0")
    assert lhs == rhs == HallElement.torus(K0Class(-1, 1))
