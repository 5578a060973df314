"""
Digamma, polygamma and Hurwitz zeta at high precision
=====================================================

Every value carries its own precision tag.  Results are computed with guard
digits and rounded when printed.
"""

from fractions import Fraction

import mpmath

from lagrangemin import (
    PrecisionConfig,
    digamma,
    digamma_reference,
    hurwitz_zeta,
    polygamma,
    riemann_zeta,
)

cfg = PrecisionConfig(40)

# psi(1) is minus Euler's constant
print("psi(1)      =", digamma(1, cfg).to_str(40))
print("-euler      =", mpmath.nstr(-mpmath.mpf(mpmath.euler), 40))

# Arguments can be exact rationals given as strings
print("psi(3/2)    =", digamma("3/2", cfg).to_str(30))

# The double-precision partial sum is a cheap sanity check, good to ~1e-6
print("reference   =", digamma_reference(1.5).to_str(8))

###############################################################################
# Polygamma is tied to the Hurwitz zeta function:
# psi^(n)(z) = (-1)^(n+1) n! zeta(n+1, z)

for n in range(1, 5):
    print(f"psi^({n})(1)  =", polygamma(n, 1, cfg).to_str(25))

###############################################################################
# At half-integers the Hurwitz zeta reduces to the Riemann zeta

half = Fraction(3, 2)
for u in (2, 3, 4):
    lhs = hurwitz_zeta(u, half, cfg)
    rhs = (2**u - 1) * riemann_zeta(u, cfg) - 2**u
    print(f"zeta({u}, 3/2) = {lhs.to_str(20)}   difference {(lhs - rhs).to_str(3)}")
