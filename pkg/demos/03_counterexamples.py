"""
Residue classes that beat (p+1)/2
=================================

For a residue beta of q mod p, with inverse beta*, two families of
conditions single out classes where an explicit index gives a coefficient
of size p - beta.  Each certificate is rechecked independently.
"""

from ternary_cyclotomic import (
    beiter_sets,
    beta_class,
    construct,
    interval_plus,
    least_admissible_q,
    mp_lower_bound,
    q_threshold,
    verify_certificate,
)

for p in (11, 13, 23, 41, 67, 73):
    minus, plus = beiter_sets(p)
    print(f"p={p:3d}  B-={minus}  B+={plus}  lower bound {mp_lower_bound(p)} vs (p+1)/2 = {(p + 1) // 2}")

# Walk through one positive construction by hand
c = beta_class(13, 5)
print("\nbeta=5, beta*=%d, q threshold %s" % (c.beta_star, q_threshold(c, "plus")))
iv = interval_plus(c, 239)
print("admissible a for q=239:", iv, "->", iv.integers())

for p, beta, sign in ((11, 4, "minus"), (13, 5, "plus"), (29, 12, "plus")):
    q = least_admissible_q(p, beta, sign)
    for cert in construct(p, beta, q, sign):
        res = verify_certificate(cert)
        checks = ", ".join(f"{ch.name}={ch.passed}" for ch in res.checks)
        print(f"{sign:5s} p={p} q={q} r={cert.r} n={cert.n} claimed {cert.claimed}: {checks}")
