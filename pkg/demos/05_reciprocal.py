"""
The reciprocal series 1/Phi_n
=============================

1/Phi_n has period n, so one block of n coefficients says everything.  For
ternary n the largest coefficient equals p - 1 exactly for a thin family of
triples.
"""

from ternary_cyclotomic import reciprocal_block, reciprocal_height_predicate

block = reciprocal_block(105)
print("1/Phi_105, first 24:", block.expand(24).tolist())
print("H(105) =", block.height, " minimal period", block.minimal_period())

for t in ((3, 5, 7), (3, 7, 13), (3, 13, 19), (5, 11, 41), (5, 61, 71), (5, 19, 29)):
    p, q, r = t
    h = reciprocal_block(p * q * r).height
    print(f"{t}: H = {h}, p-1 = {p - 1}, predicted {reciprocal_height_predicate(*t).value}")
