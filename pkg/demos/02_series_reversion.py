"""
Locating the root of digamma by series reversion
================================================

Write psi(a + h) - psi(a) = h M(h).  Reversing w = h M(h) gives h as a power
series in w, and evaluating it at w = -psi(a) moves from the anchor a toward
the zero of psi.
"""

from fractions import Fraction

from lagrangemin import PrecisionConfig, digamma, lagrange_invert, psi_root, slope_series

cfg = PrecisionConfig(30)
a = Fraction(3, 2)
order = 8

m = slope_series(a, order, cfg)
print("slope coefficients:")
for j, c in enumerate(m.coeffs):
    print(f"  M_{j} = {c.to_str(20)}")

inverse = lagrange_invert(a, m, order)
w = -digamma(a, cfg)

###############################################################################
# Partial sums of the inverse series approach the root

root = psi_root(cfg)
for n, s in enumerate(inverse.partial_sums(w)):
    print(f"order {n}: {s.to_str(25)}   error {(s - root).to_str(3)}")

print("Newton root:", root.to_str(25))
