"""Slow, obviously-correct reference implementations used only by the tests.

Nothing here imports the package.
"""


def is_prime_trial(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def inverse_by_scan(a, m):
    for x in range(1, m):
        if a * x % m == 1:
            return x
    return None


def factor_trial(n):
    out, d = [], 2
    while d * d <= n:
        e = 0
        while n % d == 0:
            n //= d
            e += 1
        if e:
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


def mobius(n):
    fac = factor_trial(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def _times_binomial(poly, d):
    # poly * (x^d - 1)
    out = [0] * (len(poly) + d)
    for i, c in enumerate(poly):
        out[i + d] += c
        out[i] -= c
    return out


def _div_binomial(poly, d):
    # poly / (x^d - 1), exact; work upward: q_i = q_{i-d} - poly_i
    qlen = len(poly) - d
    quot = [0] * qlen
    for i in range(qlen):
        quot[i] = (quot[i - d] if i >= d else 0) - poly[i]
    return quot


def cyclo_naive(n):
    """Coefficients of Phi_n from prod_{d | n} (x^d - 1)^mu(n/d)."""
    divisors = [d for d in range(1, n + 1) if n % d == 0]
    poly = [1]
    for d in divisors:
        if mobius(n // d) == 1:
            poly = _times_binomial(poly, d)
    for d in divisors:
        if mobius(n // d) == -1:
            poly = _div_binomial(poly, d)
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return poly


def series_inverse(coeffs, length):
    """First `length` Taylor coefficients of 1/P for P(0) = 1."""
    out = [0] * length
    for k in range(length):
        s = 1 if k == 0 else 0
        for j in range(1, min(k, len(coeffs) - 1) + 1):
            s -= coeffs[j] * out[k - j]
        out[k] = s
    return out


def rho_sigma_scan(p, q):
    target = (p - 1) * (q - 1)
    hits = [(rho, sigma) for sigma in range(p) for rho in range(q)
            if rho * p + sigma * q == target]
    assert len(hits) == 1
    return hits[0]
