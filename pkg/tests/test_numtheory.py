import pytest
from hypothesis import given, strategies as st

from oracles import factor_trial, inverse_by_scan, is_prime_trial
from ternary_cyclotomic.errors import InvalidInput, NotCoprime, SearchLimitExceeded
from ternary_cyclotomic.numtheory import (
    factorize,
    find_prime_in_ap,
    is_prime,
    mod_inverse,
    odd_primes_up_to,
    totient,
)


@pytest.mark.parametrize("n, expected", [(2, True), (91127, True), (1133, False), (1, False), (0, False)])
def test_is_prime_examples(n, expected):
    assert is_prime(n) is expected


def test_is_prime_matches_trial_division_below_20000():
    assert [n for n in range(20000) if is_prime(n)] == [n for n in range(20000) if is_prime_trial(n)]


@pytest.mark.parametrize("n, expected", [
    (2**61 - 1, True),            # Mersenne prime
    (2**64 - 59, True),           # largest 64-bit prime
    (3215031751, False),          # strong pseudoprime to bases 2, 3, 5, 7
    (3825123056546413051, False), # strong pseudoprime to the first nine prime bases
    ((2**32 - 5) * (2**32 - 17), False),
])
def test_is_prime_64_bit_edge_cases(n, expected):
    assert is_prime(n) is expected


def test_mod_inverse_examples():
    assert mod_inverse(4, 11) == 3
    assert mod_inverse(1, 97) == 1
    with pytest.raises(NotCoprime):
        mod_inverse(6, 9)
    with pytest.raises(InvalidInput):
        mod_inverse(3, 1)


@given(st.integers(-10**6, 10**6), st.integers(2, 400))
def test_mod_inverse_property(a, m):
    expected = inverse_by_scan(a % m, m)
    if expected is None:
        with pytest.raises(NotCoprime):
            mod_inverse(a, m)
    else:
        x = mod_inverse(a, m)
        assert x == expected and a * x % m == 1


def test_find_prime_in_ap_examples():
    assert find_prime_in_ap(4, 11, 11, 10**6) == 37
    assert find_prime_in_ap(228, 649, 59, 10**6) == 877
    with pytest.raises(NotCoprime):
        find_prime_in_ap(2, 4, 1, 100)
    with pytest.raises(SearchLimitExceeded):
        find_prime_in_ap(1, 1000, 10, 500)


@given(st.integers(1, 300), st.integers(0, 5000))
def test_find_prime_in_ap_is_least(modulus, lower):
    residue = 1
    s = find_prime_in_ap(residue, modulus, lower, 10**7)
    assert s > lower and s % modulus == residue % modulus and is_prime_trial(s)
    assert not any(is_prime_trial(x) for x in range(lower + 1, s) if x % modulus == residue % modulus)


@pytest.mark.parametrize("n, factors", [(105, ((3, 1), (5, 1), (7, 1))), (649, ((11, 1), (59, 1))), (1, ())])
def test_factorize_examples(n, factors):
    assert factorize(n).factors == factors


@given(st.integers(1, 10**6))
def test_factorize_round_trip(n):
    fac = factorize(n)
    assert list(fac.factors) == factor_trial(n)


def test_factorize_large_semiprime():
    a, b = 4294967291, 4294967279
    assert factorize(a * b).factors == ((b, 1), (a, 1))
    assert factorize(a * a).factors == ((a, 2),)


def test_totient_and_sieve():
    assert totient(105) == 48
    assert odd_primes_up_to(30) == [3, 5, 7, 11, 13, 17, 19, 23, 29]
