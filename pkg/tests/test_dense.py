import numpy as np
import pytest

from oracles import cyclo_naive, mobius, series_inverse
from ternary_cyclotomic.dense import (
    ReciprocalPrediction,
    cyclotomic_poly,
    exact_divide,
    height_of,
    reciprocal_block,
    reciprocal_height_predicate,
)
from ternary_cyclotomic.errors import InvalidInput, NotSquarefree, TooLarge
from ternary_cyclotomic.numtheory import factorize, is_squarefree

SQUAREFREE = [n for n in range(2, 400) if is_squarefree(n)]


def test_phi_15_and_105():
    assert cyclotomic_poly(15).tolist() == [1, -1, 0, 1, -1, 1, 0, -1, 1]
    v = cyclotomic_poly(105)
    assert v[7] == -2 and v.degree == 48 and v[1000] == 0 and v[-1] == 0
    assert height_of(cyclotomic_poly(385)) == (3, 119)


@pytest.mark.parametrize("n", SQUAREFREE)
def test_matches_naive_oracle(n):
    assert cyclotomic_poly(n).tolist() == cyclo_naive(n)


@pytest.mark.parametrize("n", SQUAREFREE[::7])
def test_palindromic_and_value_at_one(n):
    c = np.asarray(cyclotomic_poly(n).coeffs)
    assert np.array_equal(c, c[::-1])
    primes = factorize(n).primes
    assert int(c.sum()) == (primes[0] if len(primes) == 1 else 1)


def test_rejects_bad_indices():
    with pytest.raises(NotSquarefree):
        cyclotomic_poly(12)
    with pytest.raises(InvalidInput):
        cyclotomic_poly(1)
    with pytest.raises(TooLarge):
        cyclotomic_poly(10**7 + 1)
    with pytest.raises(TooLarge):
        cyclotomic_poly(3 * 5 * 7 * 11 * 13, dense_cap=100)


def test_exact_divide_errors():
    assert exact_divide([-1, 0, 1], [-1, 1]).tolist() == [1, 1]
    with pytest.raises(ArithmeticError):
        exact_divide([1, 0, 1], [-1, 1])
    with pytest.raises(InvalidInput):
        exact_divide([1, 0, 1], [1, 2])
    big = np.array([2**62, 0, 2**62], dtype=np.int64)
    with pytest.raises(TooLarge):
        exact_divide(big, [-3, 1])


@pytest.mark.parametrize("n", [3, 15, 21, 105, 165, 231, 385, 1155])
def test_reciprocal_block_matches_series(n):
    block = reciprocal_block(n)
    assert block.expand(3 * n).tolist() == series_inverse(cyclo_naive(n), 3 * n)
    assert n % block.minimal_period() == 0


@pytest.mark.parametrize("n", [105, 385, 1001, 3 * 5 * 31])
def test_reciprocal_times_phi_is_one(n):
    phi = np.asarray(cyclotomic_poly(n).coeffs)
    prod = np.convolve(phi, reciprocal_block(n).expand(3 * n))[: 3 * n]
    assert prod[0] == 1 and not prod[1:].any()


def test_reciprocal_small_values():
    assert reciprocal_block(3).block.tolist() == [1, -1, 0]
    assert reciprocal_block(105).height == 1
    assert reciprocal_height_predicate(3, 5, 7) is ReciprocalPrediction.LESS
    # q = r = 1 (mod 3) with r < 2(q-1)
    assert reciprocal_height_predicate(3, 7, 13) is ReciprocalPrediction.LESS
    assert reciprocal_height_predicate(5, 11, 31) is ReciprocalPrediction.LESS
    assert reciprocal_height_predicate(3, 13, 19) is ReciprocalPrediction.EQUAL
    assert reciprocal_block(3 * 13 * 19).height == 2


def test_naive_mobius_sanity():
    assert [mobius(n) for n in (1, 2, 6, 12, 30)] == [1, -1, 1, 0, -1]
