"""Residue classes that break Beiter's bound, and explicit certificates for them.

For an odd prime p and 1 <= beta <= (p-3)/2 with inverse beta* mod p:

    B-(p): p <= beta + 2 beta* + 1 and beta > beta*
    B+(p): beta + beta* >= p and beta* <= 2 beta

Each member yields, for suitable primes q = beta (mod p), a rational window of
admissible a; for every integer a in it, the least prime r > q with
r (q - pa) = -1 (mod pq) gives a coefficient of size p - beta in Phi_pqr.
"""

from __future__ import annotations

import logging
import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Literal

from .dense import DEFAULT_DENSE_CAP, MAX_INDEX, cyclotomic_poly
from .errors import (
    ConditionViolated,
    InvalidInput,
    NoIntegerInInterval,
    RNotPrime,
    SearchLimitExceeded,
)
from .kaplan import DEFAULT_SCAN_CAP, OddPrimeTriple, ternary_coeff, ternary_height
from .numtheory import find_prime_in_ap, is_prime, mod_inverse

log = logging.getLogger(__name__)

DEFAULT_R_CAP = 10**7

Sign = Literal["minus", "plus"]
CERT_KINDS = ("minus", "plus", "moller", "lehmer", "yves")


@dataclass(frozen=True)
class BetaClass:
    p: int
    beta: int
    beta_star: int

    @property
    def sigma(self) -> int:
        return self.beta_star - 1


@dataclass(frozen=True)
class IntervalQ:
    """Rational interval with exact endpoints; `empty` marks the empty set."""

    lo: Fraction = Fraction(0)
    hi: Fraction = Fraction(0)
    lo_open: bool = True
    hi_open: bool = False
    empty: bool = False

    @classmethod
    def empty_set(cls) -> IntervalQ:
        return cls(empty=True)

    @property
    def lo_num(self) -> int:
        return self.lo.numerator

    @property
    def lo_den(self) -> int:
        return self.lo.denominator

    @property
    def hi_num(self) -> int:
        return self.hi.numerator

    @property
    def hi_den(self) -> int:
        return self.hi.denominator

    @property
    def length(self) -> Fraction:
        return Fraction(0) if self.empty else max(Fraction(0), self.hi - self.lo)

    def __contains__(self, x) -> bool:
        if self.empty:
            return False
        above = x > self.lo if self.lo_open else x >= self.lo
        below = x < self.hi if self.hi_open else x <= self.hi
        return above and below

    def integers(self) -> list[int]:
        if self.empty:
            return []
        first = math.floor(self.lo) + 1 if self.lo_open else math.ceil(self.lo)
        last = math.ceil(self.hi) - 1 if self.hi_open else math.floor(self.hi)
        return list(range(first, last + 1))

    def __str__(self) -> str:
        if self.empty:
            return "{}"
        left = "(" if self.lo_open else "["
        right = ")" if self.hi_open else "]"
        return f"{left}{self.lo}, {self.hi}{right}"


@dataclass(frozen=True)
class Certificate:
    kind: str
    p: int
    q: int
    r: int
    alpha: int
    n: int
    claimed: int
    exact_height: bool = False

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> Certificate:
        try:
            cert = cls(
                kind=str(data["kind"]),
                p=int(data["p"]),
                q=int(data["q"]),
                r=int(data["r"]),
                alpha=int(data["alpha"]),
                n=int(data["n"]),
                claimed=int(data["claimed"]),
                exact_height=bool(data.get("exact_height", False)),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInput(f"malformed certificate: {exc}") from exc
        if cert.kind not in CERT_KINDS:
            raise InvalidInput(f"unknown certificate kind {cert.kind!r}")
        return cert


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool | None  # None: skipped
    detail: str = ""


@dataclass
class VerificationResult:
    certificate: Certificate
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        ran = [c for c in self.checks if c.passed is not None]
        return bool(ran) and all(c.passed for c in ran)

    def check(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def _check_odd_prime(p: int) -> None:
    if p < 3 or not is_prime(p):
        raise InvalidInput(f"{p} is not an odd prime")


def beta_class(p: int, beta: int) -> BetaClass:
    _check_odd_prime(p)
    if not 1 <= beta <= p - 1:
        raise InvalidInput(f"beta={beta} outside [1, {p - 1}]")
    return BetaClass(p, beta, mod_inverse(beta, p))


def in_b_minus(c: BetaClass) -> bool:
    p, b, bs = c.p, c.beta, c.beta_star
    return 1 <= b <= (p - 3) // 2 and p <= b + 2 * bs + 1 and b > bs


def in_b_plus(c: BetaClass) -> bool:
    p, b, bs = c.p, c.beta, c.beta_star
    return 1 <= b <= (p - 3) // 2 and b + bs >= p and bs <= 2 * b


def beiter_sets(p: int) -> tuple[list[int], list[int]]:
    _check_odd_prime(p)
    minus, plus = [], []
    for beta in range(1, (p - 3) // 2 + 1):
        c = beta_class(p, beta)
        if in_b_minus(c):
            minus.append(beta)
        if in_b_plus(c):
            plus.append(beta)
    return minus, plus


def mp_lower_bound(p: int) -> int | None:
    """p - min B(p), a lower bound for the largest ternary height with least prime p."""
    minus, plus = beiter_sets(p)
    members = minus + plus
    return p - min(members) if members else None


def max_b_element(p: int) -> int:
    """(p - 3)/2, checked to lie in B(p) through the p mod 3 branch."""
    _check_odd_prime(p)
    if p < 11:
        raise InvalidInput(f"B({p}) is empty below 11")
    beta = (p - 3) // 2
    c = beta_class(p, beta)
    if p % 3 == 1:
        ok = c.beta_star == 2 * (p - 1) // 3 and in_b_plus(c)
    else:
        ok = c.beta_star == (p - 2) // 3 and in_b_minus(c)
    if not ok:
        raise ConditionViolated(f"(p-3)/2 = {beta} not in B({p}) as expected")
    return beta


def _check_q(c: BetaClass, q: int) -> None:
    if q <= c.p or not is_prime(q) or q % c.p != c.beta:
        raise InvalidInput(f"q={q} must be a prime > {c.p} with q = {c.beta} (mod {c.p})")


def interval_minus(c: BetaClass, q: int) -> IntervalQ:
    """Admissible real a for the negative construction at this q."""
    _check_q(c, q)
    p, b, bs, sigma = c.p, c.beta, c.beta_star, c.sigma
    if not (1 <= b <= (p - 3) // 2 and b >= sigma + 2 and p >= b + sigma + 2):
        raise ConditionViolated(f"beta={b} fails the negative-case preconditions for p={p}")
    if p > b + 2 * bs + 1:
        return IntervalQ.empty_set()
    lo = Fraction(q * (p - bs - 2 - b), p * (p - bs - 2))
    if p < b + 2 * bs + 1:
        hi = Fraction(q * (p - bs - b), p * (p - bs))
    else:
        hi = Fraction(q * bs - 1, p * (p - bs - 1))
    return IntervalQ(lo, hi, lo_open=True, hi_open=False)


def _gamma(c: BetaClass) -> Fraction:
    p, b, bs = c.p, c.beta, c.beta_star
    return min(Fraction(p - bs, p - b), Fraction(bs - b, bs))


def interval_plus(c: BetaClass, q: int) -> IntervalQ:
    """Admissible real a for the positive construction; the lower end is open."""
    _check_q(c, q)
    p, b, bs = c.p, c.beta, c.beta_star
    if not (1 <= b <= (p - 3) // 2 and b + c.sigma >= p - 1):
        raise ConditionViolated(f"beta={b} fails the positive-case preconditions for p={p}")
    if bs > 2 * b:
        return IntervalQ.empty_set()
    lo = Fraction(q * (p - 1 - 2 * b), p * (p - 1 - b))
    hi = q * _gamma(c) / p
    if lo.denominator == 1:
        log.info("closed/open boundary: lower endpoint %s is an integer (p=%d, q=%d)", lo, p, q)
    return IntervalQ(lo, hi, lo_open=True, hi_open=False)


def q_threshold(c: BetaClass, sign: Sign) -> Fraction:
    """q beyond which the admissible interval has length >= 1."""
    p, b, bs = c.p, c.beta, c.beta_star
    if sign == "minus":
        if not in_b_minus(c):
            raise ConditionViolated(f"{b} not in B-({p})")
        if p == b + 2 * bs + 1:
            return Fraction((b + bs - 1) * (p * (b + bs) + 1), b)
        return Fraction(p * (p - bs) * (p - bs - 2), 2 * b)
    if sign == "plus":
        if not in_b_plus(c):
            raise ConditionViolated(f"{b} not in B+({p})")
        denom = _gamma(c) * (p - 1 - b) - p + 1 + 2 * b
        if denom <= 0:
            raise ConditionViolated(f"interval length does not grow with q for beta={b}")
        return Fraction(p * (p - 1 - b)) / denom
    raise InvalidInput(f"sign must be 'minus' or 'plus', got {sign!r}")


def _least_r(p: int, q: int, a: int, r_cap: int) -> int:
    pq = p * q
    # r (q - pa) = -1 (mod pq)
    residue = -mod_inverse(q - p * a, pq) % pq
    return find_prime_in_ap(residue, pq, q, r_cap)


def _membership(p: int, beta: int, sign: Sign) -> BetaClass:
    c = beta_class(p, beta)
    member = in_b_minus(c) if sign == "minus" else in_b_plus(c)
    if not member:
        raise ConditionViolated(f"beta={beta} not in B{'-' if sign == 'minus' else '+'}({p})")
    return c


def construct_minus(p: int, beta: int, q: int, r_cap: int = DEFAULT_R_CAP) -> list[Certificate]:
    """One certificate with coefficient beta - p per integer a in the admissible interval."""
    c = _membership(p, beta, "minus")
    alphas = interval_minus(c, q).integers()
    if not alphas:
        raise NoIntegerInInterval(f"no integer a for p={p}, beta={beta}, q={q}")
    certs = []
    for a in alphas:
        r = _least_r(p, q, a, r_cap)
        w = (p - beta - 1) * q - (p - c.beta_star - 1) * a * p
        certs.append(Certificate("minus", p, q, r, a, p - 1 + w * r, beta - p, False))
    return certs


def construct_plus(p: int, beta: int, q: int, r_cap: int = DEFAULT_R_CAP) -> list[Certificate]:
    """One certificate with coefficient p - beta per integer a in the admissible interval."""
    c = _membership(p, beta, "plus")
    alphas = interval_plus(c, q).integers()
    if not alphas:
        raise NoIntegerInInterval(f"no integer a for p={p}, beta={beta}, q={q}")
    exact = beta + c.beta_star == p
    certs = []
    for a in alphas:
        r = _least_r(p, q, a, r_cap)
        w = 1 + (p - beta - 1) * q - (p - beta) * a * p
        certs.append(Certificate("plus", p, q, r, a, p - 1 + w * r, p - beta, exact))
    return certs


def construct(p: int, beta: int, q: int, sign: Sign, r_cap: int = DEFAULT_R_CAP) -> list[Certificate]:
    if sign == "minus":
        return construct_minus(p, beta, q, r_cap)
    if sign == "plus":
        return construct_plus(p, beta, q, r_cap)
    raise InvalidInput(f"sign must be 'minus' or 'plus', got {sign!r}")


def least_admissible_q(p: int, beta: int, sign: Sign, q_cap: int = 10**7) -> int:
    """Least prime q = beta (mod p), q > p, whose interval contains an integer."""
    c = _membership(p, beta, sign)
    interval = interval_minus if sign == "minus" else interval_plus
    q = p + beta
    while q <= q_cap:
        if is_prime(q) and interval(c, q).integers():
            return q
        q += p
    raise SearchLimitExceeded(f"no admissible q <= {q_cap} for p={p}, beta={beta}")


def _least_prime_2_mod(p: int) -> int:
    q = p + 2
    while not is_prime(q):
        q += p
    return q


def moller(p: int, m: int = 1, search: bool = False, q: int | None = None,
           max_m: int = 10**5) -> Certificate:
    """Coefficient (p+1)/2 at n = (p-1)(qr+1)/2 with q = 2 (mod p), r = (mpq-1)/2.

    With search=True, odd m >= the given one are tried until r is a prime > q.
    """
    _check_odd_prime(p)
    if p <= 3:
        raise InvalidInput("needs p > 3")
    if q is None:
        q = _least_prime_2_mod(p)
    elif q <= p or not is_prime(q) or q % p != 2:
        raise InvalidInput(f"q={q} must be a prime > {p} with q = 2 (mod {p})")
    if m < 1:
        raise InvalidInput("m must be positive")
    while True:
        r = (m * p * q - 1) // 2
        reason = None
        if (m * p * q) % 2 == 0:
            reason = f"m*p*q = {m * p * q} is even, so (mpq-1)/2 is not an integer"
        elif not is_prime(r):
            reason = f"(mpq-1)/2 = {r} is not prime"
        elif r <= q:
            reason = f"r = {r} does not exceed q = {q}"
        if reason is None:
            break
        if not search or m >= max_m:
            raise RNotPrime(reason)
        m += 1
    n = (p - 1) * (q * r + 1) // 2
    return Certificate("moller", p, q, r, m, n, (p + 1) // 2, True)


def lehmer(p: int, q: int, r: int) -> Certificate:
    """Coefficient (p-1)/2 at n = (p-3)(qr+1)/2 for the same (q, r) as the Moller family."""
    _check_odd_prime(p)
    if p <= 3:
        raise InvalidInput("p = 3 gives the degenerate value 0")
    if q <= p or not is_prime(q) or q % p != 2:
        raise InvalidInput(f"q={q} must be a prime > {p} with q = 2 (mod {p})")
    m, rem = divmod(2 * r + 1, p * q)
    if rem or r <= q or not is_prime(r):
        raise RNotPrime(f"r={r} is not a prime of the form (mpq-1)/2 above q")
    n = (p - 3) * (q * r + 1) // 2
    return Certificate("lehmer", p, q, r, m, n, (p - 1) // 2, False)


def yves_beta(e: int, p: int) -> tuple[int, int]:
    """(beta, p - beta) for the family p = N - 9 (mod 3N), N = 2^(2e+1).

    beta = ((N+1)p + 9)/(3N) lies in B+(p) once p >= N^2/2 - 9.
    """
    if e < 1:
        raise InvalidInput("e must be positive")
    N = 2 ** (2 * e + 1)
    failures = []
    if p < 3 or not is_prime(p):
        failures.append(f"{p} is not an odd prime")
    if p % (3 * N) != (N - 9) % (3 * N):
        failures.append(f"p mod {3 * N} = {p % (3 * N)}, need {(N - 9) % (3 * N)}")
    if 2 * p < N * N - 18:
        failures.append(f"p < N^2/2 - 9 = {N * N // 2 - 9}")
    if failures:
        raise ConditionViolated("; ".join(failures))
    if 2 * p == N * N - 18:
        log.warning("p = %d sits exactly on the size boundary N^2/2 - 9 for e = %d", p, e)
    beta = ((N + 1) * p + 9) // (3 * N)
    c = beta_class(p, beta)
    if c.beta_star != (2 * p + N) // 3 or not in_b_plus(c):
        raise ConditionViolated(f"beta={beta} unexpectedly outside B+({p})")
    return beta, ((2 * N - 1) * p - 9) // (3 * N)


def find_beta_window(p: int, epsilon: Fraction) -> int | None:
    """Least beta with p(1+e)/3 <= beta <= p(1+2e)/3 and
    2p(1-e/2)/3 <= beta* <= 2p(1+e)/3, re-checked to lie in B+(p)."""
    _check_odd_prime(p)
    epsilon = Fraction(epsilon)
    if not 0 < epsilon < Fraction(1, 6):
        raise InvalidInput("epsilon must lie in (0, 1/6)")
    b_lo = math.ceil(Fraction(p, 3) * (1 + epsilon))
    b_hi = math.floor(Fraction(p, 3) * (1 + 2 * epsilon))
    s_lo = Fraction(2 * p, 3) * (1 - epsilon / 2)
    s_hi = Fraction(2 * p, 3) * (1 + epsilon)
    for beta in range(max(b_lo, 1), min(b_hi, p - 1) + 1):
        c = beta_class(p, beta)
        if s_lo <= c.beta_star <= s_hi and in_b_plus(c):
            return beta
    return None


def duke_beta(p: int) -> int | None:
    """Root beta < p/2 of beta^2 = -1 (mod p), or None when p = 3 (mod 4)."""
    _check_odd_prime(p)
    if p % 4 == 3:
        return None
    for c in range(2, p):
        if pow(c, (p - 1) // 2, p) == p - 1:
            root = pow(c, (p - 1) // 4, p)
            return min(root, p - root)
    return None  # unreachable for odd primes p = 1 (mod 4)


def verify_certificate(cert: Certificate, dense_cap: int = DEFAULT_DENSE_CAP,
                       scan_cap: int = DEFAULT_SCAN_CAP) -> VerificationResult:
    """Recompute the claimed coefficient by every route the caps allow."""
    result = VerificationResult(cert)
    try:
        t = OddPrimeTriple(cert.p, cert.q, cert.r)
    except InvalidInput as exc:
        result.checks.append(Check("triple", False, str(exc)))
        return result
    result.checks.append(Check("triple", True))

    got = ternary_coeff(t, cert.n)
    result.checks.append(Check("kaplan", got == cert.claimed, f"a({cert.n}) = {got}"))

    if t.degree <= dense_cap and t.n <= MAX_INDEX:
        got = cyclotomic_poly(t.n, dense_cap)[cert.n]
        result.checks.append(Check("dense", got == cert.claimed, f"a({cert.n}) = {got}"))
    else:
        result.checks.append(Check("dense", None, "over dense cap"))

    if cert.exact_height:
        if t.degree + 1 <= scan_cap:
            rep = ternary_height(t, scan_cap=scan_cap)
            result.checks.append(
                Check("height", rep.height == abs(cert.claimed), f"A = {rep.height} at {rep.witness}")
            )
        else:
            result.checks.append(Check("height", None, "over scan cap"))
    return result
