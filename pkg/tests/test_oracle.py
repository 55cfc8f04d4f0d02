from fractions import Fraction

import pytest

from ihall import compare, oracle
from ihall.caps import SizeCapExceeded
from ihall.curve import UnsupportedField


def test_brute_hall_examples():
    assert oracle.brute_hall_number((1, 1), (1,), (1,), 2) == 3
    assert oracle.brute_hall_number((2,), (1,), (1,), 2) == 1
    assert oracle.brute_hall_number((1,), (1,), (), 3) == 1
    assert oracle.brute_hall_number((2, 1), (1,), (1, 1), 2) == 1


def test_brute_counts_golden():
    assert oracle.brute_aut((1, 1), 2) == 6
    assert oracle.brute_aut((2, 1), 2) == 8
    assert oracle.brute_aut((1,), 5) == 4
    assert oracle.brute_hom((2,), (1,), 2) == 2
    assert oracle.brute_mono_count((1,), (2,), 2) == 1
    assert oracle.brute_epi_from_line(2, 3) == 6


def test_brute_c1_golden():
    assert oracle.brute_c1_product((1,), (1,), 2) == {
        ((), 1): Fraction(1),
        ((1, 1), 0): Fraction(1, 2),
        ((2,), 0): Fraction(1, 2),
    }
    assert oracle.brute_c1_product((1,), (1,), 3) == {
        ((), 1): Fraction(2),
        ((1, 1), 0): Fraction(1, 3),
        ((2,), 0): Fraction(2, 3),
    }
    assert oracle.brute_c1_product((2,), (1,), 2) == {
        ((1,), 1): Fraction(1),
        ((2, 1), 0): Fraction(1, 2),
        ((3,), 0): Fraction(1, 2),
    }
    assert oracle.brute_c1_product((1,), (), 3) == {((1,), 0): Fraction(1)}


def test_brute_ext_middle_bundle_golden():
    table = oracle.brute_ext_middle_bundle(2, 1)
    assert table == {(1, ()): Fraction(3)}
    table = oracle.brute_ext_middle_bundle(2, 2)
    assert table[(2, ())] == 12


def test_binary_form_census_golden():
    hist = oracle.binary_form_census(2, 1)
    assert sum(hist.values()) == 3 and len(hist) == 3
    hist = oracle.binary_form_census(2, 2)
    assert sum(hist.values()) == 7 and len(hist) == 7
    assert set(oracle.binary_form_census(3, 2).values()) == {2}


def test_caps_and_fields():
    with pytest.raises(SizeCapExceeded):
        oracle.brute_hall_table((7,), 2)
    with pytest.raises(SizeCapExceeded):
        oracle.brute_c1_product((2, 1), (1, 1), 2)
    with pytest.raises(UnsupportedField):
        oracle.binary_form_census(4, 2)


def test_oracle_is_deterministic():
    a = oracle.brute_c1_product((1, 1), (1,), 2)
    oracle.brute_hall_table.cache_clear()
    assert oracle.brute_c1_product((1, 1), (1,), 2) == a


@pytest.mark.parametrize("suite", ["hall", "epi", "c1", "census", "cokernels", "extensions"])
def test_fast_comparisons_pass(suite):
    rep = compare.SUITES[suite]()
    assert rep.passed, rep.failures[:3]
    assert rep.cases
