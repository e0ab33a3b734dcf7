"""
Single coefficients and heights of Phi_pqr
==========================================

A ternary coefficient only needs 2p binary coefficients, so indices far
beyond what a dense polynomial could hold are cheap.  A full height scan
reuses the same sum row by row.
"""

import time

from ternary_cyclotomic import OddPrimeTriple, ternary_coeff, ternary_height, transport_neg, transport_same
from ternary_cyclotomic.kaplan import general_ceiling, inverse_class_bound

print("a_105(7) =", ternary_coeff((3, 5, 7), 7))

t = OddPrimeTriple(67, 191, 91127)
start = time.perf_counter()
value = ternary_coeff(t, 417817361)
print(f"a_{t.n}(417817361) = {value}  ({(time.perf_counter() - start) * 1e3:.2f} ms,"
      f" the polynomial has degree {t.degree})")

t = OddPrimeTriple(17, 29, 1931)
start = time.perf_counter()
rep = ternary_height(t)
print(f"A(17*29*1931) = {rep.height} at n = {rep.witness} (value {rep.signed_value}),"
      f" {t.degree + 1} coefficients in {time.perf_counter() - start:.2f}s")
print("  ceilings:", general_ceiling(17), inverse_class_bound(17, 29, 1931))

# Moving r inside its class mod pq keeps a coefficient; -r flips its sign.
n2 = transport_same(t, rep.witness, 2917)
n3 = transport_neg(t, rep.witness, 2999)
print("r -> 2917:", ternary_coeff((17, 29, 2917), n2))
print("r -> 2999:", ternary_coeff((17, 29, 2999), n3))
