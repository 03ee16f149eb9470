from fractions import Fraction
from math import gcd, prod

import pytest
from hypothesis import given, strategies as st

import brute
from genphi.arith import euler_phi
from genphi.errors import DomainError, InconsistencyError
from genphi.phiproduct import (
    _Accumulator,
    phi_pair,
    phi_product_general,
    phi_product_pow2,
    split_length,
)

values_st = st.lists(st.integers(1, 500), min_size=1, max_size=12)


@pytest.mark.parametrize("a, b, expected", [(5, 8, 16), (1, 9, 6), (3, 3, 6)])
def test_phi_pair(a, b, expected):
    assert phi_pair(a, b) == expected


@pytest.mark.parametrize("values, expected", [([5, 8], 16), ([5, 8, 9, 13], 1152), ([3, 3, 3, 3], 54)])
def test_pow2(values, expected):
    assert phi_product_pow2(values) == expected
    assert brute.totient(prod(values)) == expected


@pytest.mark.parametrize("values", [[5], [5, 8, 9], []])
def test_pow2_rejects_bad_length(values):
    with pytest.raises(DomainError):
        phi_product_pow2(values)


@pytest.mark.parametrize("values, expected", [
    ([5, 8, 9, 13, 18, 22], 414720),
    ([7], 6),
    ([2, 3, 5], 8),
])
def test_general(values, expected):
    assert phi_product_general(values) == expected


def test_general_rejects_empty():
    with pytest.raises(DomainError):
        phi_product_general([])


def test_worked_expansion_term_by_term():
    ratio = lambda x, y: Fraction(gcd(x, y), euler_phi(gcd(x, y)))  # noqa: E731
    value = prod(euler_phi(a) for a in (5, 8, 9, 13, 18, 22))
    value *= ratio(5, 8) * ratio(9, 13) * ratio(18, 22)
    value *= ratio(5 * 8, 9 * 13 * 18 * 22) * ratio(9 * 13, 18 * 22)
    assert value == 414720
    assert brute.totient(5 * 8 * 9 * 13 * 18 * 22) == 414720


@pytest.mark.parametrize("n, r, m", [(1, 0, 1), (6, 1, 3), (8, 3, 1), (12, 2, 3), (7, 0, 7)])
def test_split_length(n, r, m):
    assert split_length(n) == (r, m)


def test_non_exact_division_is_an_error():
    acc = _Accumulator()
    with pytest.raises(InconsistencyError):
        acc.gcd_ratio(3, 3)  # 1 * 3 / phi(3) is not an integer


@given(st.integers(1, 10**6), st.integers(1, 10**6))
def test_pow2_length_two_is_pair(a, b):
    assert phi_product_pow2([a, b]) == phi_pair(a, b) == euler_phi(a * b)


@given(values_st, st.randoms(use_true_random=False))
def test_matches_totient_and_is_permutation_invariant(values, rnd):
    expected = euler_phi(prod(values))
    assert phi_product_general(values) == expected
    shuffled = list(values)
    rnd.shuffle(shuffled)
    assert phi_product_general(shuffled) == expected


@given(st.lists(st.integers(1, 10**4), min_size=16, max_size=16))
def test_deep_pow2_levels(values):
    assert phi_product_pow2(values) == euler_phi(prod(values))
