import numpy as np
import pytest

from oracles import cyclo_naive, inverse_by_scan, rho_sigma_scan
from ternary_cyclotomic.binary import binary_coeff, binary_table, rho_sigma
from ternary_cyclotomic.errors import InvalidInput
from ternary_cyclotomic.numtheory import odd_primes_up_to

PAIRS = [(p, q) for p in odd_primes_up_to(40) for q in odd_primes_up_to(60) if p < q]


@pytest.mark.parametrize("p, q, rho, sigma", [(11, 59, 42, 2), (3, 5, 1, 1), (13, 31, 11, 7)])
def test_rho_sigma_examples(p, q, rho, sigma):
    rs = rho_sigma(p, q)
    assert (rs.rho, rs.sigma) == (rho, sigma)


def test_rho_sigma_rejects_bad_pairs():
    for p, q in [(5, 3), (2, 5), (9, 11), (7, 7)]:
        with pytest.raises(InvalidInput):
            rho_sigma(p, q)


@pytest.mark.parametrize("p, q", PAIRS)
def test_rho_sigma_scan_and_sigma_identity(p, q):
    rs = rho_sigma(p, q)
    assert (rs.rho, rs.sigma) == rho_sigma_scan(p, q)
    assert rs.sigma + 1 == inverse_by_scan(q % p, p)


def test_binary_coeff_examples():
    assert binary_coeff(3, 5, 0) == 1
    assert binary_coeff(3, 5, 7) == -1
    assert binary_coeff(11, 59, 66) == 1
    with pytest.raises(InvalidInput):
        binary_coeff(3, 5, 15)


@pytest.mark.parametrize("p, q", PAIRS[:40])
def test_binary_matches_naive_oracle(p, q):
    expected = cyclo_naive(p * q)
    expected += [0] * (p * q - len(expected))
    got = [binary_coeff(p, q, m) for m in range(p * q)]
    assert got == expected
    assert np.array_equal(binary_table(p, q), np.array(expected))
    assert max(abs(c) for c in got) <= 1
