"""Closed-form coefficients of binary cyclotomic polynomials Phi_pq.

With (p-1)(q-1) = rho*p + sigma*q, every 0 <= m < pq is either
alpha*p + beta*q or alpha*p + beta*q - pq for the unique alpha, beta with
alpha*p = m (mod q) and beta*q = m (mod p); the coefficient is then read off
from where (alpha, beta) sits relative to (rho, sigma).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import InvalidInput
from .numtheory import is_prime, mod_inverse


@dataclass(frozen=True)
class RhoSigma:
    p: int
    q: int
    rho: int
    sigma: int


def _check_pair(p: int, q: int) -> None:
    if not (2 < p < q and is_prime(p) and is_prime(q)):
        raise InvalidInput(f"need odd primes p < q, got ({p}, {q})")


def rho_sigma(p: int, q: int) -> RhoSigma:
    _check_pair(p, q)
    # (sigma + 1) q = 1 (mod p) forces sigma = q^{-1} - 1 mod p
    sigma = mod_inverse(q, p) - 1
    rho, rem = divmod((p - 1) * (q - 1) - sigma * q, p)
    assert rem == 0 and 0 <= rho <= q - 1
    return RhoSigma(p, q, rho, sigma)


@lru_cache(maxsize=256)
def _binary_params(p: int, q: int) -> tuple[int, int, int, int]:
    rs = rho_sigma(p, q)
    return rs.rho, rs.sigma, mod_inverse(p, q), mod_inverse(q, p)


def binary_coeff(p: int, q: int, m: int) -> int:
    """Coefficient of x^m in Phi_pq, for 0 <= m < pq."""
    rho, sigma, p_inv, q_inv = _binary_params(p, q)
    if not 0 <= m < p * q:
        raise InvalidInput(f"m={m} outside [0, {p * q})")
    alpha = m * p_inv % q
    beta = m * q_inv % p
    s = alpha * p + beta * q
    if s == m:
        return 1 if alpha <= rho and beta <= sigma else 0
    # otherwise s == m + pq
    return -1 if alpha > rho and beta > sigma else 0


@lru_cache(maxsize=32)
def _binary_table(p: int, q: int) -> np.ndarray:
    rho, sigma, p_inv, q_inv = _binary_params(p, q)
    m = np.arange(p * q, dtype=np.int64)
    alpha = m * p_inv % q
    beta = m * q_inv % p
    direct = alpha * p + beta * q == m
    table = np.zeros(p * q, dtype=np.int8)
    table[direct & (alpha <= rho) & (beta <= sigma)] = 1
    table[~direct & (alpha > rho) & (beta > sigma)] = -1
    table.flags.writeable = False
    return table


def binary_table(p: int, q: int) -> np.ndarray:
    """Read-only int8 array of a_pq(m) for m in [0, pq)."""
    _check_pair(p, q)
    return _binary_table(p, q)
