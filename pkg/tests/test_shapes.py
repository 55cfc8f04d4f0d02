import pytest

from ihall.curve import census
from ihall.scalars import specialize_v
from ihall.shapes import (
    h_shape,
    order_one_identity,
    order_two_identity,
    point_count_symbolic,
    theta_shape,
    verify_exp_symbolic,
)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7])
def test_symbolic_point_counts_specialize(q):
    c = census(q, 5)
    for d in range(1, 6):
        assert specialize_v(point_count_symbolic(d), q) == c.n(d)


def test_low_order_identities_vanish():
    assert order_one_identity().is_zero()
    assert order_two_identity().is_zero()


def test_theta_one_equals_h_one():
    assert theta_shape(1) == h_shape(1)


@pytest.mark.parametrize("order", [2, 3, 4])
def test_exp_identity_symbolic(order):
    assert verify_exp_symbolic(order).passed
