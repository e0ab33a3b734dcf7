"""
Binary coefficients and the dense oracle
========================================

Phi_pq has coefficients in {-1, 0, 1}, and there is a closed form for each
one.  We compare it with the polynomial built by exact division.
"""

import numpy as np

from ternary_cyclotomic import binary_table, cyclotomic_poly, height_of, rho_sigma

# (p-1)(q-1) = rho*p + sigma*q has a unique non-negative solution
rs = rho_sigma(11, 59)
print("rho, sigma for (11, 59):", rs.rho, rs.sigma)

table = binary_table(3, 5)
print("closed form, Phi_15:", table[:9].tolist())
print("dense oracle, Phi_15:", cyclotomic_poly(15).tolist())

# the first non-flat cyclotomic polynomial
phi = cyclotomic_poly(105)
print("Phi_105 has degree", phi.degree, "and a(7) =", phi[7])

# heights grow once three odd primes are involved
for n in (105, 385, 1001, 3 * 5 * 31):
    h, k = height_of(cyclotomic_poly(n))
    print(f"A({n}) = {h}, first reached at k = {k}")

# Phi_n is palindromic and Phi_n(1) = 1 for n with two or more prime factors
c = phi.coeffs
print("palindromic:", bool(np.array_equal(c, c[::-1])), " value at 1:", int(c.sum()))
