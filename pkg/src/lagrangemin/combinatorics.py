"""Faa di Bruno machinery: compositions, Bell partitions, derivative sums.

This is the combinatorial route to the inversion coefficients.  The kernel
``L = 1/M`` (M the slope series of psi, see :mod:`lagrangemin.series`) is
differentiated with the Bell-partition formula for a reciprocal, and the
(n-1)-th derivative of ``L**n`` is summed over compositions of n-1 into n
parts with multinomial weights.  Nothing here divides power series, so it
serves as an independent check on :func:`lagrangemin.series.lagrange_invert`.

All counting is done with Python ints and Fractions.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .series import slope_series
from .specfun import BigReal, PrecisionConfig, Real

__all__ = [
    "BellPartition",
    "enumerate_bell_partitions",
    "enumerate_compositions",
    "l_derivatives",
    "multinomial",
    "power_derivative",
    "reciprocal_derivative",
]

Composition = tuple  # (l_1, ..., l_n), non-negative, summing to n - 1


@dataclass(frozen=True)
class BellPartition:
    """Multiplicities (k_1, ..., k_m) with sum j*k_j = m."""

    counts: tuple

    def __post_init__(self):
        if any(k < 0 for k in self.counts):
            raise ValueError(f"negative multiplicity in {self.counts}")
        if sum(j * k for j, k in enumerate(self.counts, 1)) != self.m:
            raise ValueError(f"{self.counts} is not a partition of {self.m}")

    @property
    def m(self) -> int:
        return len(self.counts)

    @property
    def blocks(self) -> int:
        """K = k_1 + ... + k_m."""
        return sum(self.counts)

    @property
    def k0(self) -> int:
        """k_2 + 2 k_3 + ... + (m-1) k_m, i.e. m - K."""
        return sum((j - 1) * k for j, k in enumerate(self.counts, 1))


def multinomial(n_minus_1: int, parts: Sequence[int]) -> int:
    """(n-1)! / (l_1! ... l_n!)."""
    if any(p < 0 for p in parts) or sum(parts) != n_minus_1:
        raise ValueError(f"parts {tuple(parts)} do not sum to {n_minus_1}")
    out = math.factorial(n_minus_1)
    for p in parts:
        out //= math.factorial(p)
    return out


def _compositions(total: int, slots: int) -> Iterator[tuple]:
    if slots == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, slots - 1):
            yield (first,) + rest


def enumerate_compositions(n: int) -> list[Composition]:
    """All n-tuples of non-negative ints summing to n-1, lexicographic order.

    >>> enumerate_compositions(2)
    [(0, 1), (1, 0)]
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    return list(_compositions(n - 1, n))


def _bell_counts(remaining: int, largest: int) -> Iterator[dict]:
    # partitions of `remaining` into parts <= largest, as {part: multiplicity}
    if remaining == 0:
        yield {}
        return
    if largest == 0:
        return
    for k in range(remaining // largest, -1, -1):
        for rest in _bell_counts(remaining - k * largest, largest - 1):
            if k:
                rest = dict(rest)
                rest[largest] = k
            yield rest


@lru_cache(maxsize=None)
def _bell_partitions(m: int) -> tuple:
    out = []
    for mult in _bell_counts(m, m):
        out.append(tuple(mult.get(j, 0) for j in range(1, m + 1)))
    return tuple(BellPartition(c) for c in sorted(out))


def enumerate_bell_partitions(m: int) -> list[BellPartition]:
    """All (k_1..k_m) with sum j*k_j = m, ascending lexicographic in counts."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return list(_bell_partitions(m))


@lru_cache(maxsize=None)
def _reciprocal_weights(m: int) -> tuple:
    # m! (-1)^K K! / prod_j (j!)^k_j k_j!  for each partition
    out = []
    for part in _bell_partitions(m):
        w = Fraction(math.factorial(m) * math.factorial(part.blocks))
        for j, k in enumerate(part.counts, 1):
            w /= math.factorial(j) ** k * math.factorial(k)
        out.append((part, -w if part.blocks % 2 else w))
    return tuple(out)


def reciprocal_derivative(g_derivs: Sequence, m: int):
    """m-th derivative of 1/g at a point, from g, g', ..., g^(m) there.

    Sums over Bell partitions of m:

        m! (-1)^K K! / g^(K+1) * prod_j (g^(j)/j!)^k_j / k_j!

    with K the number of blocks.  ``m = 0`` gives 1/g.
    """
    if len(g_derivs) < m + 1:
        raise ValueError(f"need {m + 1} derivatives, got {len(g_derivs)}")
    g0 = g_derivs[0]
    if g0 == 0:
        raise ZeroDivisionError("reciprocal of a function vanishing at the point")
    if m == 0:
        return 1 / g0
    inv = 1 / g0
    inv_powers = [inv]
    for _ in range(m):
        inv_powers.append(inv_powers[-1] * inv)
    total = 0
    for part, weight in _reciprocal_weights(m):
        term = inv_powers[part.blocks] * weight
        for j, k in enumerate(part.counts, 1):
            if k:
                term = term * g_derivs[j] ** k
        total = term + total
    return total


def l_derivatives(a: Real, max_order: int, cfg: PrecisionConfig = PrecisionConfig()) -> list[BigReal]:
    """[L(a), L'(a), ..., L^(max_order)(a)] for the kernel L = 1/M.

    M's derivatives at the anchor are j! m_j with m_j = psi^(j+1)(a)/(j+1)!.
    """
    if max_order < 0:
        raise ValueError("max_order must be >= 0")
    m = slope_series(a, max_order, cfg)
    m_derivs = [c * math.factorial(j) for j, c in enumerate(m.coeffs)]
    return [reciprocal_derivative(m_derivs, j) for j in range(max_order + 1)]


@lru_cache(maxsize=None)
def _grouped_compositions(n: int) -> tuple:
    # Compositions of n-1 into n parts, grouped by their multiset of parts:
    # (sorted parts, multinomial * number of distinct orderings).
    out = []
    for mult in _bell_counts(n - 1, n - 1):
        nonzero = sum(mult.values())
        if nonzero > n:
            continue
        parts = [j for j, k in sorted(mult.items()) for _ in range(k)]
        parts = [0] * (n - nonzero) + parts
        orderings = math.factorial(n)
        for k in Counter(parts).values():
            orderings //= math.factorial(k)
        out.append((tuple(parts), multinomial(n - 1, parts) * orderings))
    return tuple(out)


def power_derivative(l_derivs: Sequence, n: int):
    """(L**n)^(n-1) at the anchor, i.e. the inversion coefficient h_n.

    Sums multinomial(n-1; l) * prod_i L^(l_i) over compositions l of n-1 into
    n parts.  Compositions that are permutations of each other contribute the
    same product, so each multiset is evaluated once and weighted by its
    number of orderings.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if len(l_derivs) < n:
        raise ValueError(f"need derivatives up to order {n - 1}, got {len(l_derivs)}")
    total = 0
    for parts, weight in _grouped_compositions(n):
        term = weight
        for p in parts:
            term = term * l_derivs[p]
        total = term + total
    return total
