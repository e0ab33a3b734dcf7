"""
Moller and Lehmer families
==========================

With q = 2 (mod p) and r = (mpq - 1)/2 prime, the index (p-1)(qr+1)/2
carries the coefficient (p+1)/2, and (p-3)(qr+1)/2 carries (p-1)/2.
"""

from ternary_cyclotomic import lehmer, moller, verify_certificate
from ternary_cyclotomic.errors import RNotPrime

for p in (5, 7, 11, 13):
    try:
        cert = moller(p)
    except RNotPrime as exc:
        print(f"p={p}: m=1 fails ({exc}), searching")
        cert = moller(p, search=True)
    for c in (cert, lehmer(cert.p, cert.q, cert.r)):
        res = verify_certificate(c)
        print(f"  {c.kind:6s} ({c.p}, {c.q}, {c.r}) a({c.n}) = {c.claimed}  verified={res.passed}")
