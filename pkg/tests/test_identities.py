import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ihall.hall import HallElement
from ihall.identities import (
    cyclic_epi_sum,
    h_commutator,
    line_identity,
    line_identity_gap2,
    line_identity_gap1,
    theta_line_relation,
    verify_cyclic_epi_sum,
    verify_cokernel_census,
    verify_exp_identity,
    verify_layer_discipline,
    verify_theta_commutativity,
    verify_zeta_series,
    zeta_product,
)
from ihall.scalars import V, rfv
from ihall.sheaves import K0Class

v = rfv(V)
q_ = v * v


@given(st.integers(-5, 5), st.integers(2, 8))
@settings(max_examples=30, deadline=None)
def test_general_line_identity(r, m):
    assert line_identity(r, m).is_zero()


@pytest.mark.parametrize("r", range(-4, 5))
def test_low_line_identities(r):
    assert line_identity_gap1(r).is_zero()
    assert line_identity_gap2(r).is_zero()


@pytest.mark.parametrize("r", [-3, 0, 2])
def test_printed_sign_leaves_torus_residual(r):
    residual = line_identity_gap2(r, sign=-1)
    expected = HallElement.torus(K0Class(1, r + 1)) * (2 * v ** -3 * (q_ - 1) ** 2)
    assert residual == expected


@given(st.integers(1, 8), st.integers(-4, 4))
@settings(max_examples=30, deadline=None)
def test_theta_line_relation(m, r):
    assert theta_line_relation(m, r).is_zero()


def test_cyclic_epi_sum():
    assert cyclic_epi_sum(2, 1) == 3
    for q in (2, 3, 5):
        assert verify_cyclic_epi_sum(q, 4).passed


def test_zeta_series():
    assert zeta_product(2, 3)[1] == 2 ** 2 - 2
    for q in (2, 3, 5):
        assert verify_zeta_series(q, 8).passed


def test_point_resolved_suites():
    assert verify_theta_commutativity(2, 5).passed
    assert verify_exp_identity(2, 3).passed
    assert verify_layer_discipline(2, 2, range(-1, 2)).passed
    assert verify_cokernel_census(2, 3).passed


@pytest.mark.parametrize("m,r", [(1, 0), (2, 0), (3, -2), (2, 2)])
def test_h_commutator(m, r):
    assert h_commutator(m, r, 2).is_zero()
