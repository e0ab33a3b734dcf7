"""Brute-force ground truth for cyclotomic coefficients.

Phi_n is built one prime at a time from Phi_{mp}(x) = Phi_m(x^p) / Phi_m(x)
(p not dividing m) using exact synthetic division by a monic divisor.  The
periodic block of 1/Phi_n comes from the quotient (x^n - 1) / Phi_n.  None of
this shares code with the Kaplan path, which is the point.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np
from numba import njit

from .errors import InvalidInput, NotSquarefree, TooLarge
from .numtheory import factorize, is_prime

DEFAULT_DENSE_CAP = 2_000_000
MAX_INDEX = 10**7

_INT64_LIMIT = (1 << 63) - 1


@dataclass(frozen=True, eq=False)
class CoeffVec:
    n: int
    coeffs: np.ndarray

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return int(self.coeffs[k])
        return 0

    def tolist(self) -> list[int]:
        return [int(c) for c in self.coeffs]


@dataclass(frozen=True, eq=False)
class PeriodicSeries:
    n: int
    block: np.ndarray

    def coefficient(self, k: int) -> int:
        return int(self.block[k % self.n])

    def expand(self, length: int) -> np.ndarray:
        reps = -(-length // self.n)
        return np.tile(self.block, reps)[:length]

    def minimal_period(self) -> int:
        b = self.block
        for d in range(1, self.n + 1):
            if self.n % d == 0 and np.array_equal(b, np.roll(b, -d)):
                return d
        return self.n  # unreachable: d = n always matches

    @property
    def height(self) -> int:
        return int(np.abs(self.block).max())


class ReciprocalPrediction(str, Enum):
    EQUAL = "equal p-1"
    LESS = "less than p-1"


@njit(cache=True)
def _divide_kernel(num, nz_idx, nz_val, dd, budget):
    # status: 0 ok, 1 overflow risk, 2 non-zero remainder
    rem = num.copy()
    dn = len(num) - 1
    quot = np.zeros(dn - dd + 1, dtype=np.int64)
    for i in range(dn - dd, -1, -1):
        c = rem[i + dd]
        if c == 0:
            continue
        if abs(c) > budget:
            return quot, 1
        quot[i] = c
        for j in range(len(nz_idx)):
            rem[i + nz_idx[j]] -= c * nz_val[j]
    for k in range(dd):
        if rem[k] != 0:
            return quot, 2
    return quot, 0


def exact_divide(num: np.ndarray, den: np.ndarray) -> np.ndarray:
    """Quotient of num by the monic polynomial den (ascending coefficients).

    Raises ArithmeticError if the division leaves a remainder and TooLarge if
    an intermediate could leave the int64 range.
    """
    num = np.asarray(num, dtype=np.int64)
    den = np.trim_zeros(np.asarray(den, dtype=np.int64), "b")
    dd = len(den) - 1
    if dd < 0 or den[-1] != 1:
        raise InvalidInput("divisor must be monic")
    dn = len(num) - 1
    if dn < dd:
        if np.any(num):
            raise ArithmeticError("division is not exact")
        return np.zeros(1, dtype=np.int64)
    den_height = int(np.abs(den).max())
    # every rem entry receives at most dd + 1 updates of size <= |c| * den_height
    budget = (_INT64_LIMIT - int(np.abs(num).max())) // ((dd + 1) * den_height)
    nz = np.flatnonzero(den[:-1])
    quot, status = _divide_kernel(num, nz, den[nz], dd, budget)
    if status == 1:
        raise TooLarge("intermediate coefficient would overflow int64")
    if status == 2:
        raise ArithmeticError("division is not exact")
    return quot


def _check_index(n: int) -> list[int]:
    if not isinstance(n, (int, np.integer)) or n < 2:
        raise InvalidInput(f"index must be an integer >= 2, got {n!r}")
    if n > MAX_INDEX:
        raise TooLarge(f"index {n} exceeds {MAX_INDEX}")
    fac = factorize(int(n))
    if not fac.is_squarefree:
        raise NotSquarefree(f"{n} is not squarefree")
    return fac.primes


def cyclotomic_poly(n: int, dense_cap: int = DEFAULT_DENSE_CAP) -> CoeffVec:
    primes = _check_index(n)
    phi = 1
    for prime in primes:
        phi *= prime - 1
    if phi > dense_cap:
        raise TooLarge(f"degree phi({n}) = {phi} exceeds dense cap {dense_cap}")
    # ascending primes keep the divisor as short as possible in the last step
    m = primes[0]
    coeffs = np.ones(m, dtype=np.int64)
    for prime in primes[1:]:
        stretched = np.zeros((len(coeffs) - 1) * prime + 1, dtype=np.int64)
        stretched[::prime] = coeffs
        coeffs = exact_divide(stretched, coeffs)
        m *= prime
    coeffs.flags.writeable = False
    return CoeffVec(n, coeffs)


def height_of(v: CoeffVec) -> tuple[int, int]:
    """(max |a_n(k)|, least k attaining it)."""
    mags = np.abs(v.coeffs)
    k = int(np.argmax(mags))
    return int(mags[k]), k


def reciprocal_block(n: int, dense_cap: int = DEFAULT_DENSE_CAP) -> PeriodicSeries:
    """First n Taylor coefficients of 1/Phi_n; the series repeats with period n."""
    poly = cyclotomic_poly(n, dense_cap)
    x_n_minus_1 = np.zeros(n + 1, dtype=np.int64)
    x_n_minus_1[0], x_n_minus_1[n] = -1, 1
    # 1/Phi_n = -Q / (1 - x^n) with Q = (x^n - 1)/Phi_n of degree n - phi(n) < n
    quot = exact_divide(x_n_minus_1, poly.coeffs)
    block = np.zeros(n, dtype=np.int64)
    block[: len(quot)] = -quot
    block.flags.writeable = False
    return PeriodicSeries(n, block)


def reciprocal_height_predicate(p: int, q: int, r: int) -> ReciprocalPrediction:
    """Classify whether 1/Phi_pqr reaches height p - 1.

    That happens exactly when q = r = +-1 (mod p), with the same sign, and
    r < (p-1)(q-1)/(p-2).
    """
    if not (2 < p < q < r and all(is_prime(x) for x in (p, q, r))):
        raise InvalidInput(f"need odd primes p < q < r, got ({p}, {q}, {r})")
    same_class = q % p == r % p and q % p in (1, p - 1)
    if same_class and r * (p - 2) < (p - 1) * (q - 1):
        return ReciprocalPrediction.EQUAL
    return ReciprocalPrediction.LESS
