"""Single coefficients and heights of ternary cyclotomic polynomials.

For n = pqr with p < q < r odd primes, Kaplan's lemma writes

    a_pqr(n) = sum_{m<p} b_m - sum_{m<p} b_{m+q},

where b_i = a_pq(f(i)) if f(i) <= floor(n/r) and 0 otherwise, and f(i) is the
residue of (n - i) * r^{-1} modulo pq.  Only 2p binary coefficients are
touched per index.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .binary import binary_coeff, binary_table
from .errors import CongruenceViolated, InvalidInput, TooLarge
from .numtheory import ceil_div, is_prime, mod_inverse

DEFAULT_SCAN_CAP = 2_000_000_000

# Elements per scanner chunk; bounds memory at a few tens of MB.
_CHUNK_ELEMENTS = 1 << 22


@dataclass(frozen=True)
class OddPrimeTriple:
    p: int
    q: int
    r: int

    def __post_init__(self):
        p, q, r = self.p, self.q, self.r
        if not (2 < p < q < r):
            raise InvalidInput(f"need 2 < p < q < r, got ({p}, {q}, {r})")
        for x in (p, q, r):
            if not is_prime(x):
                raise InvalidInput(f"{x} is not prime")

    @property
    def n(self) -> int:
        return self.p * self.q * self.r

    @property
    def pq(self) -> int:
        return self.p * self.q

    @property
    def degree(self) -> int:
        return (self.p - 1) * (self.q - 1) * (self.r - 1)

    def __iter__(self):
        return iter((self.p, self.q, self.r))


@dataclass(frozen=True)
class HeightReport:
    triple: OddPrimeTriple
    height: int
    witness: int
    signed_value: int


def as_triple(t) -> OddPrimeTriple:
    if isinstance(t, OddPrimeTriple):
        return t
    return OddPrimeTriple(*t)


def f_value(t, n: int, m: int) -> int:
    t = as_triple(t)
    pq = t.pq
    if not 0 <= m < pq:
        raise InvalidInput(f"m={m} outside [0, {pq})")
    return (n - m) * mod_inverse(t.r, pq) % pq


def ternary_coeff(t, n: int) -> int:
    """a_pqr(n) for any n >= 0 (zero past the degree)."""
    t = as_triple(t)
    if n < 0:
        return 0
    p, q, r, pq = t.p, t.q, t.r, t.pq
    r_inv = mod_inverse(r, pq)
    cutoff = n // r
    total = 0
    for m in range(p):
        f = (n - m) * r_inv % pq
        if f <= cutoff:
            total += binary_coeff(p, q, f)
        f = (n - m - q) * r_inv % pq
        if f <= cutoff:
            total -= binary_coeff(p, q, f)
    return total


def kaplan_vector(t, start: int = 0, stop: int | None = None) -> np.ndarray:
    """a_pqr(n) for start <= n < stop (default: the whole polynomial), vectorized over n."""
    t = as_triple(t)
    p, q, r, pq = t.p, t.q, t.r, t.pq
    if stop is None:
        stop = t.degree + 1
    if pq > 3_000_000_000:
        raise TooLarge(f"pq = {pq} too large for int64 residue products")
    table = binary_table(p, q)
    r_inv = mod_inverse(r, pq)
    n = np.arange(start, stop, dtype=np.int64)
    cutoff = n // r
    out = np.zeros(len(n), dtype=np.int64)
    # f(m+1) = f(m) - r^{-1}, so only one multiplication per sign
    f_lo = (n % pq) * r_inv % pq
    f_hi = ((n - q) % pq) * r_inv % pq
    for _ in range(p):
        out += np.where(f_lo <= cutoff, table[f_lo], 0)
        out -= np.where(f_hi <= cutoff, table[f_hi], 0)
        f_lo -= r_inv
        f_lo %= pq
        f_hi -= r_inv
        f_hi %= pq
    return out


def _scan_rows(t: OddPrimeTriple, k_start: int, k_stop: int) -> tuple[int, int, int]:
    """Best (height, witness, value) over n with floor(n/r) in [k_start, k_stop).

    Within one row k = floor(n/r) the Kaplan sum is a fixed +-1 window sum over
    T_k(j) = a_pq(k + g(j) mod pq) [if that residue <= k], g(j) = j r^{-1} mod pq,
    so prefix sums give every coefficient of the row in O(1).
    """
    p, q, r, pq = t.p, t.q, t.r, t.pq
    degree = t.degree
    table = binary_table(p, q)
    r_inv = mod_inverse(r, pq)
    lag = p + q - 1
    j = np.arange(-lag, r, dtype=np.int64)
    g = (j % pq) * r_inv % pq
    width = len(j)
    rows_per_chunk = max(1, _CHUNK_ELEMENTS // width)
    n0 = np.arange(r)
    best = (-1, 0, 0)
    for k0 in range(k_start, k_stop, rows_per_chunk):
        k1 = min(k0 + rows_per_chunk, k_stop)
        k = np.arange(k0, k1, dtype=np.int64)[:, None]
        x = g[None, :] + k
        x[x >= pq] -= pq
        terms = np.where(x <= k, table[x], 0).astype(np.int32)
        prefix = np.zeros((k1 - k0, width + 1), dtype=np.int32)
        np.cumsum(terms, axis=1, out=prefix[:, 1:])
        hi = n0 + lag + 1
        vals = (prefix[:, hi] - prefix[:, hi - p]) - (prefix[:, hi - q] - prefix[:, hi - q - p])
        flat = vals.ravel()
        limit = degree + 1 - k0 * r
        if limit < flat.size:
            flat = flat[:limit]
        idx = int(np.argmax(np.abs(flat)))
        h = abs(int(flat[idx]))
        if h > best[0]:
            best = (h, k0 * r + idx, int(flat[idx]))
    return best


def ternary_height(t, workers: int = 1, scan_cap: int = DEFAULT_SCAN_CAP) -> HeightReport:
    """Height of Phi_pqr by a full scan, with the least index attaining it."""
    t = as_triple(t)
    if workers < 1:
        raise InvalidInput("workers must be positive")
    if t.degree + 1 > scan_cap:
        raise TooLarge(f"{t.degree + 1} coefficients exceed scan cap {scan_cap}")
    rows = t.degree // t.r + 1
    bounds = np.linspace(0, rows, min(workers, rows) + 1).astype(int)
    spans = [(int(a), int(b)) for a, b in zip(bounds[:-1], bounds[1:]) if b > a]
    if len(spans) == 1:
        results = [_scan_rows(t, *spans[0])]
    else:
        with ThreadPoolExecutor(max_workers=len(spans)) as pool:
            results = list(pool.map(lambda s: _scan_rows(t, *s), spans))
    height, witness, value = max(results, key=lambda res: (res[0], -res[1]))
    return HeightReport(t, height, witness, value)


def transport_same(t, n: int, s: int) -> int:
    """Index n' with a_pqs(n') = a_pqr(n), for a prime s > r with s = r (mod pq)."""
    t = as_triple(t)
    if s == t.r:
        return n
    if s < t.r or (s - t.r) % t.pq or not is_prime(s):
        raise CongruenceViolated(f"need a prime s > {t.r} with s = r (mod {t.pq}), got {s}")
    k, n0 = divmod(n, t.r)
    return k * s + n0


def transport_neg(t, n: int, u: int) -> int:
    """Index n' with a_pqu(n') = -a_pqr(n), for a prime u > pq with u = -r (mod pq)."""
    t = as_triple(t)
    pq = t.pq
    if u <= pq or (u + t.r) % pq or not is_prime(u):
        raise CongruenceViolated(f"need a prime u > {pq} with u = -r (mod {pq}), got {u}")
    k, n0 = divmod(n, t.r)
    n1 = (t.q + t.p - 1 - n0) % pq
    return k * u + n1


# Known upper bounds on A(pqr), used as cross-checks on computed heights.


def general_ceiling(p: int) -> int:
    return p - ceil_div(p, 4)


def inverse_class_bound(p: int, q: int, r: int) -> int:
    """min((p-1)/2 + a, p - a) with a = min(q*, r*, p - q*, p - r*)."""
    qs, rs = mod_inverse(q, p), mod_inverse(r, p)
    a = min(qs, rs, p - qs, p - rs)
    return min((p - 1) // 2 + a, p - a)


def residue_class_bound(p: int, q: int, r: int) -> int | None:
    """Ceiling from the residues of q, r mod p, or None when neither applies."""
    small = {1, 2, p - 1, p - 2}
    half = {(p - 1) // 2, (p + 1) // 2}
    residues = {q % p, r % p}
    if residues & small:
        return (p + 1) // 2
    if residues & half:
        return (p + 3) // 2
    return None


def height_bounds_hold(report: HeightReport) -> bool:
    p, q, r = report.triple
    h = report.height
    ok = h <= general_ceiling(p) and h <= inverse_class_bound(p, q, r)
    cond = residue_class_bound(p, q, r)
    return ok and (cond is None or h <= cond)
