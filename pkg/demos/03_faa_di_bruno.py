"""
An independent route through Faa di Bruno sums
==============================================

The same coefficients come out of a second construction.  The derivatives of
L = 1/M come from Bell partitions, and the powers L^n from a sum over
compositions.  The two engines share only the special functions.
"""

from fractions import Fraction

import mpmath

from lagrangemin import (
    PrecisionConfig,
    enumerate_bell_partitions,
    enumerate_compositions,
    expand,
)

cfg = PrecisionConfig(50)

# The combinatorial objects behind the sums
print("partitions of 4:", [p.counts for p in enumerate_bell_partitions(4)])
print("compositions of 3 into 3 parts:", enumerate_compositions(3))

###############################################################################
# Compare the engines coefficient by coefficient

for a in (1, Fraction(3, 2)):
    rev = expand(a, 8, "reversion", cfg)
    fdb = expand(a, 8, "faadibruno", cfg)
    print(f"anchor {a}")
    for n, (x, y) in enumerate(zip(rev.h, fdb.h), 1):
        rel = abs(((x - y) / y).value)
        print(f"  h_{n} = {x.to_str(18):>26}   rel. difference {mpmath.nstr(rel, 2)}")
