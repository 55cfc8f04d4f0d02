from hypothesis import given, settings
from hypothesis import strategies as st

from ihall.curve import PointIndex, partitions
from ihall.sheaves import (
    K0Class,
    SheafClass,
    TorsionType,
    aut_order,
    aut_partition,
    epi_from_line_count,
    euler_form,
    ext_dim,
    hall_number,
    hall_polynomial,
    hom_count_torsion,
    hom_dim,
    k0_class,
    line,
    mono_count,
    single,
    torsion_sheaf,
)

x1, y1, x2 = PointIndex(1, 1), PointIndex(1, 2), PointIndex(2, 1)


def S(x, *parts):
    return torsion_sheaf(single(x, parts))


def test_k0_classes():
    assert k0_class(line(3)) == K0Class(1, 3)
    assert k0_class(S(x2, 3)) == K0Class(0, 6)
    assert k0_class(SheafClass()) == K0Class(0, 0)


def test_euler_form_examples():
    assert euler_form(K0Class(1, 0), K0Class(1, 3)) == 4
    assert euler_form(K0Class(1, 0), K0Class(0, 5)) == 5
    assert euler_form(K0Class(0, 5), K0Class(1, 0)) == -5


def test_hom_ext_examples():
    assert hom_dim(line(1), line(4)) == 4
    assert hom_dim(line(4), line(1)) == 0
    assert ext_dim(line(4), line(1)) == 2
    assert hom_dim(S(x2, 2), S(x2, 3)) == 4
    assert hom_dim(S(x1, 2), S(y1, 2)) == 0
    assert ext_dim(S(x1, 2), S(y1, 2)) == 0


sheaves = st.builds(
    lambda bundles, parts_x, parts_y: SheafClass(tuple(bundles), TorsionType(((x1, parts_x), (x2, parts_y)))),
    st.lists(st.integers(-3, 3), max_size=2),
    st.sampled_from([(), (1,), (2,), (1, 1), (2, 1)]),
    st.sampled_from([(), (1,), (2,)]),
)


@given(sheaves, sheaves)
@settings(max_examples=80, deadline=None)
def test_euler_form_is_hom_minus_ext(m, n):
    assert hom_dim(m, n) - ext_dim(m, n) == euler_form(k0_class(m), k0_class(n))


def test_aut_examples():
    for q in (2, 3, 4):
        assert aut_partition((1,), q) == q - 1
        assert aut_partition((1, 1), q) == (q * q - 1) * (q * q - q)
        assert aut_partition((2,), q) == q * (q - 1)
    t = TorsionType(((x1, (1,)), (x2, (1,))))
    assert aut_order(t, 2) == 1 * 3


def test_hom_count_examples():
    for qx in (2, 3, 4):
        assert hom_count_torsion((3,), (2,), qx) == qx ** 2
        assert hom_count_torsion((2,), (1, 1), qx) == qx ** 2
        assert hom_count_torsion((), (2, 1), qx) == 1


def test_hall_number_examples():
    for q in (2, 3, 4, 5):
        assert hall_number((1, 1), (1,), (1,), q) == q + 1
        assert hall_number((2,), (1,), (1,), q) == 1
        assert hall_number((2, 1), (1,), (1, 1), q) == 1
        assert hall_number((1,), (1,), (), q) == 1


def test_hall_polynomial_matches_values():
    coeffs = hall_polynomial((2, 1), (1,), (1, 1))
    assert coeffs == [1]
    coeffs = hall_polynomial((1, 1), (1,), (1,))
    assert coeffs == [1, 1]


@given(st.sampled_from([2, 3, 4, 5]), st.integers(1, 5), st.data())
@settings(max_examples=40, deadline=None)
def test_hall_number_symmetry(q, n, data):
    # the Jordan-quiver Hall algebra is commutative: g^lam_{mu,nu} = g^lam_{nu,mu}
    lam = data.draw(st.sampled_from(list(partitions(n))))
    k = data.draw(st.integers(0, n))
    mu = data.draw(st.sampled_from(list(partitions(n - k))))
    nu = data.draw(st.sampled_from(list(partitions(k))))
    assert hall_number(lam, mu, nu, q) == hall_number(lam, nu, mu, q)


@given(st.sampled_from([2, 3, 4]), st.integers(1, 5))
@settings(max_examples=20, deadline=None)
def test_submodule_sum_counts_all_submodules_of_simple_sum(q, n):
    # the semisimple module (1^n) has Gaussian-binomial many k-dim submodules
    lam = (1,) * n
    for k in range(n + 1):
        total = sum(hall_number(lam, mu, nu, q) for mu in partitions(n - k) for nu in partitions(k))
        num = den = 1
        for i in range(k):
            num *= q ** (n - i) - 1
            den *= q ** (i + 1) - 1
        assert total == num // den


def test_mono_and_epi_examples():
    for qx in (2, 3, 4):
        assert mono_count((1,), (3,), qx) == qx - 1
        assert mono_count((2,), (3,), qx) == qx ** 2 - qx
        assert epi_from_line_count(2, qx) == qx ** 2 - qx
