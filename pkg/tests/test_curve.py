import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ihall.curve import (
    UnsupportedField,
    census,
    count_points,
    enumerate_closed_points,
    enumerate_cyclic_profiles,
    enumerate_torsion_types,
    format_point,
    is_prime_power,
    monic_irreducible_count,
    verify_zeta_identity,
)

PRIME_POWERS = [2, 3, 4, 5, 7, 8, 9]


def test_point_counts():
    assert count_points(2, 1) == 3
    assert count_points(2, 2) == 1
    assert count_points(3, 1) == 4
    assert census(2, 4).counts == (3, 1, 2, 3)
    assert census(5, 1).counts == (6,)


def test_non_prime_power_rejected():
    assert not is_prime_power(6)
    with pytest.raises(ValueError):
        census(6, 2)
    with pytest.raises(UnsupportedField):
        enumerate_closed_points(4, 1)


def test_zeta_identity_examples():
    assert verify_zeta_identity(2, 4).passed
    assert verify_zeta_identity(3, 3).passed
    assert verify_zeta_identity(5, 1).passed


@given(st.sampled_from(PRIME_POWERS), st.integers(1, 8))
@settings(max_examples=30, deadline=None)
def test_zeta_identity_property(q, n):
    c = census(q, n)
    assert sum(d * c.n(d) for d in range(1, n + 1) if n % d == 0) == q ** n + 1


def test_explicit_points_over_f2():
    pts = enumerate_closed_points(2, 2)
    assert [format_point(d) for _, d in pts] == ["X1", "X1 + X0", "X0", "X1^2 + X1*X0 + X0^2"]
    assert sum(1 for x, _ in enumerate_closed_points(3, 2) if x.degree == 2) == 3


@pytest.mark.parametrize("p,d", [(2, 3), (3, 2), (5, 2), (2, 4)])
def test_explicit_points_match_census(p, d):
    pts = enumerate_closed_points(p, d)
    for e in range(1, d + 1):
        assert sum(1 for x, _ in pts if x.degree == e) == census(p, d).n(e)
    # the point at infinity is the one degree-1 point without a monic irreducible
    assert census(p, d).n(d) == monic_irreducible_count(p, d) + (1 if d == 1 else 0)


def test_profile_and_type_counts():
    assert len(enumerate_cyclic_profiles(2, 1)) == 3
    assert len(enumerate_cyclic_profiles(2, 2)) == 7
    assert len(enumerate_cyclic_profiles(3, 0)) == 1
    assert len(enumerate_torsion_types(2, 1)) == 3
    assert len(enumerate_torsion_types(2, 2)) == 10
    assert len(enumerate_torsion_types(5, 0)) == 1


@pytest.mark.parametrize("q,m", [(2, 3), (3, 3), (4, 2), (2, 5)])
def test_profile_degrees(q, m):
    for prof in enumerate_cyclic_profiles(q, m):
        assert sum(x.degree * n for x, n in prof) == m
