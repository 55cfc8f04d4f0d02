from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ihall.curve import partitions
from ihall.jordan import (
    LocalHallElement,
    check_associativity,
    check_commutativity,
    i_product,
    local_h,
    local_p,
    local_theta,
    structure_constants,
    verify_local_exp,
)
from ihall.oracle import brute_c1_product
from ihall.scalars import QuadraticNumber

OVERLAP_P2 = [(lam, mu) for n in range(4) for k in range(n + 1) for lam in partitions(k) for mu in partitions(n - k)]


def test_simple_times_simple():
    # frozen from the 1-periodic oracle (see test_oracle)
    for q in (2, 3, 5):
        got = i_product((1,), (1,), q)
        want = LocalHallElement(q, {((1, 1), 0): Fraction(1, q), ((2,), 0): 1 - Fraction(1, q), ((), 1): q - 1})
        assert got == want


def test_unit():
    assert i_product((), (2, 1), 3) == LocalHallElement.basis(3, (2, 1))


def test_golden_length_two_times_simple():
    got = i_product((2,), (1,), 2)
    assert got == LocalHallElement(2, {((1,), 1): 1, ((2, 1), 0): Fraction(1, 2), ((3,), 0): Fraction(1, 2)})


@pytest.mark.parametrize("lam,mu", OVERLAP_P2)
def test_matches_extension_oracle(lam, mu):
    assert dict(structure_constants(lam, mu, 2)) == brute_c1_product(lam, mu, 2)


def test_matches_extension_oracle_p3():
    for lam in [(), (1,), (2,), (1, 1)]:
        for mu in [(), (1,)]:
            assert dict(structure_constants(lam, mu, 3)) == brute_c1_product(lam, mu, 3)


def test_commutativity_and_associativity_reports():
    assert check_commutativity(2, 2).passed
    assert check_commutativity(3, 5).passed
    assert check_associativity(2, 4).passed


@given(st.sampled_from([2, 3, 4, 9]), st.integers(0, 6), st.data())
@settings(max_examples=40, deadline=None)
def test_commutative_property(q, n, data):
    k = data.draw(st.integers(0, n))
    lam = data.draw(st.sampled_from(list(partitions(k))))
    mu = data.draw(st.sampled_from(list(partitions(n - k))))
    assert i_product(lam, mu, q) == i_product(mu, lam, q)


def test_local_generators():
    for q in (2, 3):
        assert local_p(1, q) == LocalHallElement.basis(q, (1,), 0, Fraction(1, q - 1))
        vx = QuadraticNumber.sqrt(q)
        assert local_h(1, q) == local_p(1, q) * vx
        assert local_theta(1, q) == LocalHallElement.basis(q, (1,), 0, (vx - vx.inverse()).inverse())
        k_term = local_h(2, q).terms[((), 1)]
        assert k_term == -vx * Fraction(1, 2)


@pytest.mark.parametrize("q", [2, 3, 4])
def test_local_exp_identity(q):
    assert verify_local_exp(q, 4).passed
