import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ihall.curve import PointIndex
from ihall.hall import (
    AggregateA,
    BundlePair,
    DrinfeldGenerator,
    HallElement,
    LayerViolation,
    Resolved,
    expand,
    h_hat,
    line_numeric,
    line_symbolic,
    line_times_line,
    line_times_theta,
    omega_image,
    theta_hat,
    theta_hat_symbolic,
    theta_hat_via_cokernels,
    theta_times_line,
    torsion_numeric,
)
from ihall.identities import k0_violations
from ihall.scalars import QuadraticNumber, V, quantum_integer, rfv, specialize_v
from ihall.sheaves import K0Class, SheafClass, UnsupportedPair, single

v = rfv(V)
q_ = v * v
x, y, z = PointIndex(1, 1), PointIndex(1, 2), PointIndex(2, 1)


def T(p, *lam, q=2):
    return torsion_numeric(single(p, lam), q)


def test_torus_group_law():
    a = HallElement.torus(K0Class(1, 0)) * HallElement.torus(K0Class(0, 1))
    assert a == HallElement.torus(K0Class(1, 1))
    h = line_symbolic(2)
    assert h.torus_multiply(K0Class(0, 0)) == h


def test_line_times_line_examples():
    r = 1
    one = line_times_line(r, r)
    assert one.coefficient(BundlePair(r, r)) == v ** -1
    assert one - HallElement.basis(BundlePair(r, r), v ** -1) == HallElement.torus(K0Class(1, r)) * (v ** -1 * (q_ - 1))
    assert line_times_line(r + 1, r) == HallElement.basis(BundlePair(r, r + 1))
    assert line_times_line(r + 2, r) == HallElement.basis(BundlePair(r, r + 2), v ** -1) + HallElement.basis(
        BundlePair(r + 1, r + 1), (q_ - 1) * v ** -1
    )


def test_theta_line_coefficients():
    m, r = 3, -1
    tl = theta_times_line(m, r)
    assert tl.coefficient(AggregateA(r, m)) == ((q_ - 1) * v ** (2 * m - 1)).inverse()
    assert tl.coefficient(AggregateA(r + m, 0)) == rfv(quantum_integer(2)) * v ** (2 * m - 2)
    lt = line_times_theta(r, m)
    assert lt.coefficient(AggregateA(r, m)) == ((q_ - 1) * v ** (2 * m - 1)).inverse()
    assert lt.coefficient(AggregateA(r - m, 0, K0Class(0, m))) == rfv(quantum_integer(2)) * v ** (2 * m - 2)


def test_theta_hat_conventions():
    assert theta_hat_symbolic(0) == HallElement.one() * (v - v ** -1).inverse()
    assert theta_hat_symbolic(-2).is_zero()
    assert theta_hat(1, 2) == T(x, 1) + T(y, 1) + T(PointIndex(1, 3), 1)


def test_theta_hat_cokernels_s_independent():
    for m in (1, 2, 3):
        a = theta_hat_via_cokernels(m, 0, 2)
        assert a == theta_hat_via_cokernels(m, 5, 2) == theta_hat_via_cokernels(m, -3, 2)
        assert a == theta_hat(m, 2)


def test_h_hat_examples():
    q = 2
    c2 = specialize_v(quantum_integer(2), q) * QuadraticNumber(1, 0) / 2
    h2 = h_hat(2, q)
    assert h2.coefficient(Resolved(SheafClass(), K0Class(0, 1))) == -c2
    lam11 = Resolved(SheafClass((), single(x, (1, 1))))
    assert h2.coefficient(lam11) == c2 * (1 - q) / ((q * q - 1) * (q * q - q))


def test_omega_images():
    assert omega_image(DrinfeldGenerator("K1")) == HallElement.torus(K0Class(1, 0))
    assert omega_image(DrinfeldGenerator("C")) == HallElement.torus(K0Class(0, 1))
    assert omega_image(DrinfeldGenerator("B", 0)) == line_symbolic(0) * (-(q_ - 1).inverse())
    assert omega_image(DrinfeldGenerator("Theta", 0)) == HallElement.one() * (v - v ** -1).inverse()
    assert omega_image(DrinfeldGenerator("Theta", 2), 2) == theta_hat(2, 2)
    assert omega_image(DrinfeldGenerator("H", 2), 3) == h_hat(2, 3)
    with pytest.raises(UnsupportedPair):
        omega_image(DrinfeldGenerator("H", 2))


def test_layers_do_not_mix():
    with pytest.raises(LayerViolation):
        line_symbolic(0) + line_numeric(0, 2)
    with pytest.raises(LayerViolation):
        line_symbolic(0) * T(x, 1)


def test_unsupported_pair_is_an_error():
    with pytest.raises(UnsupportedPair):
        (line_numeric(0, 2) * T(x, 1)) * T(x, 1)


def test_json_is_sorted_and_stable():
    h = theta_hat(2, 2) + line_numeric(1, 2)
    assert h.to_json() == (line_numeric(1, 2) + theta_hat(2, 2)).to_json()


torsion_gen = st.sampled_from([(x, (1,)), (x, (2,)), (y, (1,)), (x, (1, 1)), (z, (1,))])


def _numeric(kind, q):
    if kind[0] == "O":
        return line_numeric(kind[1], q)
    p, lam = kind[1]
    return T(p, *lam, q=q)


generator = st.one_of(st.tuples(st.just("O"), st.integers(-2, 2)), st.tuples(st.just("S"), torsion_gen))


def _supported_triple(kinds):
    lines = [i for i, k in enumerate(kinds) if k[0] == "O"]
    if len(lines) > 1:
        return False
    supports = [k[1][0] for k in kinds if k[0] == "S"]
    return not lines or len(set(supports)) == len(supports)


@given(st.lists(generator, min_size=3, max_size=3), st.sampled_from([2, 3]))
@settings(max_examples=40, deadline=None)
def test_associativity_on_supported_triples(kinds, q):
    if not _supported_triple(kinds):
        return
    a, b, c = (_numeric(k, q) for k in kinds)
    assert (a * b) * c == a * (b * c)


@given(generator, generator, st.sampled_from([2, 3]))
@settings(max_examples=40, deadline=None)
def test_k0_conservation(k1, k2, q):
    if k1[0] == "O" and k2[0] == "O":
        return
    assert k0_violations(_numeric(k1, q), _numeric(k2, q)) == []


def test_k0_conservation_symbolic():
    for r in range(-2, 3):
        for s in range(-2, 3):
            assert k0_violations(line_symbolic(r), line_symbolic(s)) == []
        assert k0_violations(theta_hat_symbolic(2), line_symbolic(r)) == []


@given(generator, st.integers(-2, 2), st.integers(-2, 2), st.sampled_from([2, 3]))
@settings(max_examples=30, deadline=None)
def test_torus_is_central(k, a, b, q):
    h = _numeric(k, q)
    t = HallElement.torus(K0Class(a, b), q)
    assert t * h == h * t


@given(st.integers(1, 3), st.integers(-2, 2))
@settings(max_examples=12, deadline=None)
def test_layer_discipline(m, r):
    assert expand(theta_times_line(m, r), 2) == theta_hat(m, 2) * line_numeric(r, 2)
    assert expand(line_times_theta(r, m), 2) == line_numeric(r, 2) * theta_hat(m, 2)


@given(generator, generator, generator, st.sampled_from([2, 3]))
@settings(max_examples=25, deadline=None)
def test_bilinearity(k1, k2, k3, q):
    a, b, c = (_numeric(k, q) for k in (k1, k2, k3))
    if not (_supported_triple([k1, k2, k3]) and _supported_triple([k1, k3, k2])):
        return
    try:
        lhs = a * (b + c)
    except UnsupportedPair:
        return
    assert lhs == a * b + a * c
