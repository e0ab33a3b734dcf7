"""Exact integer and modular primitives.

Everything here works on Python ints, so intermediate products never wrap;
the 64-bit limits below are contract limits, not implementation ones.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce

from .errors import InvalidInput, NotCoprime, SearchLimitExceeded

U64_MAX = (1 << 64) - 1

# Miller-Rabin with the first 12 primes as bases is exact below this bound.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_EXACT_BOUND = 3317044064679887385961981
_SMALL_PRIMES = _MR_BASES + (41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)


@dataclass(frozen=True)
class Factorization:
    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prod = 1
        for prime, exp in self.factors:
            prod *= prime**exp
        if prod != self.n:
            raise InvalidInput(f"factors {self.factors} do not multiply to {self.n}")

    @property
    def primes(self) -> list[int]:
        return [prime for prime, _ in self.factors]

    @property
    def is_squarefree(self) -> bool:
        return all(exp == 1 for _, exp in self.factors)


def is_prime(n: int) -> bool:
    """Deterministic primality test for every n below 3.3e24 (covers 64 bits)."""
    if n < 2:
        return False
    for sp in _SMALL_PRIMES:
        if n % sp == 0:
            return n == sp
    if n >= _MR_EXACT_BOUND:
        raise InvalidInput(f"{n} exceeds the deterministic primality range")
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def mod_inverse(a: int, m: int) -> int:
    """Return x in [1, m-1] with a*x = 1 (mod m)."""
    if m < 2:
        raise InvalidInput(f"modulus must be >= 2, got {m}")
    a %= m
    g = math.gcd(a, m)
    if g != 1:
        raise NotCoprime(f"gcd({a}, {m}) = {g}")
    return pow(a, -1, m)


def find_prime_in_ap(residue: int, modulus: int, lower_bound: int, search_cap: int) -> int:
    """Smallest prime s with lower_bound < s <= search_cap and s = residue mod modulus.

    Raises SearchLimitExceeded when the progression has no prime in range.
    """
    if modulus < 1:
        raise InvalidInput(f"modulus must be positive, got {modulus}")
    if lower_bound >= search_cap:
        raise InvalidInput(f"lower_bound {lower_bound} must be below search_cap {search_cap}")
    residue %= modulus
    if math.gcd(residue, modulus) != 1:
        raise NotCoprime(f"gcd({residue}, {modulus}) != 1")
    start = lower_bound + 1
    s = start + (residue - start) % modulus
    while s <= search_cap:
        if is_prime(s):
            return s
        s += modulus
    raise SearchLimitExceeded(
        f"no prime = {residue} (mod {modulus}) in ({lower_bound}, {search_cap}]"
    )


def _pollard_brent(n: int) -> int:
    # n is odd, composite and has no small factors
    for c in range(1, n):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"Pollard rho failed on {n}")


def factorize(n: int) -> Factorization:
    if n < 1:
        raise InvalidInput(f"cannot factor {n}")
    counts: dict[int, int] = {}
    m = n
    for sp in _SMALL_PRIMES:
        while m % sp == 0:
            counts[sp] = counts.get(sp, 0) + 1
            m //= sp
    stack = [m] if m > 1 else []
    while stack:
        k = stack.pop()
        if is_prime(k):
            counts[k] = counts.get(k, 0) + 1
            continue
        d = _pollard_brent(k)
        stack.extend((d, k // d))
    return Factorization(n, tuple(sorted(counts.items())))


def is_squarefree(n: int) -> bool:
    return n >= 1 and factorize(n).is_squarefree


def totient(n: int) -> int:
    result = n
    for prime, _ in factorize(n).factors:
        result = result // prime * (prime - 1)
    return result


def odd_primes_up_to(limit: int) -> list[int]:
    """Odd primes <= limit by a plain sieve."""
    if limit < 3:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytes(len(range(i * i, limit + 1, i)))
    return [i for i in range(3, limit + 1, 2) if sieve[i]]


def ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def product(values) -> int:
    return reduce(lambda x, y: x * y, values, 1)
