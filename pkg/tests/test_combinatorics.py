import math
from fractions import Fraction
from itertools import product

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lagrangemin.combinatorics import (
    BellPartition,
    enumerate_bell_partitions,
    enumerate_compositions,
    l_derivatives,
    multinomial,
    power_derivative,
    reciprocal_derivative,
)
from lagrangemin.series import PowerSeries, lagrange_invert, ps_div, ps_pow, slope_series
from lagrangemin.specfun import BigReal, polygamma, riemann_zeta

from oracles import machin_pi, partition_counts


def one_over(m):
    unit = PowerSeries(m.anchor, (BigReal(1, 50),) + (BigReal(0, 50),) * m.order)
    return ps_div(unit, m)


def rel(x, y):
    return abs((x - y) / y).value


@pytest.mark.parametrize("n1, parts, value", [(2, (1, 1, 0), 2), (3, (1, 1, 1), 6), (0, (0,), 1), (4, (2, 2), 6)])
def test_multinomial(n1, parts, value):
    assert multinomial(n1, parts) == value


def test_multinomial_constraint():
    with pytest.raises(ValueError):
        multinomial(3, (1, 1))
    with pytest.raises(ValueError):
        multinomial(0, (1, -1))


def test_compositions_small():
    assert enumerate_compositions(1) == [(0,)]
    assert enumerate_compositions(2) == [(0, 1), (1, 0)]
    assert len(enumerate_compositions(3)) == 6


@pytest.mark.parametrize("n", range(1, 11))
def test_composition_count(n):
    comps = enumerate_compositions(n)
    assert len(comps) == math.comb(2 * n - 2, n - 1)
    assert comps == sorted(comps)
    assert all(len(c) == n and sum(c) == n - 1 for c in comps)
    assert len(set(comps)) == len(comps)


def test_composition_brute_force():
    n = 5
    brute = [c for c in product(range(n), repeat=n) if sum(c) == n - 1]
    assert enumerate_compositions(n) == brute


def test_bell_partitions_small():
    assert [p.counts for p in enumerate_bell_partitions(1)] == [(1,)]
    assert {p.counts for p in enumerate_bell_partitions(3)} == {(3, 0, 0), (1, 1, 0), (0, 0, 1)}
    assert len(enumerate_bell_partitions(5)) == 7


@pytest.mark.parametrize("m", range(1, 13))
def test_bell_partition_count(m):
    parts = enumerate_bell_partitions(m)
    assert len(parts) == partition_counts(12)[m]
    assert [p.counts for p in parts] == sorted(p.counts for p in parts)
    for p in parts:
        assert sum(j * k for j, k in enumerate(p.counts, 1)) == m
        assert p.k0 == m - p.blocks
        assert p.k0 == sum((j - 1) * k for j, k in enumerate(p.counts, 1))


def test_bell_partition_validation():
    with pytest.raises(ValueError):
        BellPartition((1, 1))
    with pytest.raises(ValueError):
        BellPartition((-1, 1))


def test_enumeration_rejects_nonpositive():
    with pytest.raises(ValueError):
        enumerate_compositions(0)
    with pytest.raises(ValueError):
        enumerate_bell_partitions(0)


def test_reciprocal_derivative_hand_cases():
    assert reciprocal_derivative([Fraction(2), Fraction(3)], 1) == Fraction(-3, 4)
    assert reciprocal_derivative([1, 1, 1], 2) == 1
    g0, g1, g2 = Fraction(3), Fraction(-2, 5), Fraction(7, 2)
    assert reciprocal_derivative([g0, g1, g2], 2) == (2 * g1**2 - g0 * g2) / g0**3
    assert reciprocal_derivative([Fraction(4)], 0) == Fraction(1, 4)


def test_reciprocal_derivative_validation():
    with pytest.raises(ValueError):
        reciprocal_derivative([1, 2], 2)
    with pytest.raises(ZeroDivisionError):
        reciprocal_derivative([0, 1], 1)


@settings(max_examples=25, deadline=None)
@given(
    st.fractions(Fraction(1, 2), 2, max_denominator=64),
    st.lists(st.fractions(-3, 3, max_denominator=64), min_size=8, max_size=8),
)
def test_reciprocal_derivative_matches_series_division(g0, rest):
    taylor = [g0] + rest
    derivs = [c * math.factorial(j) for j, c in enumerate(taylor)]
    inv = one_over(PowerSeries.from_coeffs(taylor))
    for m in range(1, 9):
        exact = reciprocal_derivative(derivs, m)
        via_series = inv.coeffs[m] * math.factorial(m)
        assert abs(via_series.to_fraction() - exact) <= abs(exact) * Fraction(1, 10**40) + Fraction(1, 10**40)


def test_reciprocal_derivative_psi_slope(cfg50):
    m = slope_series("3/2", 2, cfg50)
    derivs = [c * math.factorial(j) for j, c in enumerate(m.coeffs)]
    got = reciprocal_derivative(derivs, 2)
    ref = one_over(m).coeffs[2] * 2
    assert abs((got - ref).value) <= mpmath.mpf(10) ** -40


def test_l_derivatives_base_values(cfg50):
    ld = l_derivatives(1, 1, cfg50)
    z2, z3 = riemann_zeta(2, cfg50), riemann_zeta(3, cfg50)
    assert rel(ld[0], 1 / z2) < 1e-55
    assert rel(ld[1], z3 / z2**2) < 1e-55
    psi1 = polygamma(1, 1, cfg50)
    psi2 = polygamma(2, 1, cfg50)
    assert rel(ld[1], -psi2 / (2 * psi1**2)) < 1e-55

    ld = l_derivatives("3/2", 0, cfg50)
    from mpmath import mp

    with mp.workdps(70):
        q = machin_pi(80)
        pi = mp.mpf(q.numerator) / q.denominator
        assert abs(ld[0].value - 2 / (pi**2 - 8)) < mpmath.mpf(10) ** -49


def test_power_derivative_low_orders(cfg50):
    ld = l_derivatives("3/2", 1, cfg50)
    assert power_derivative(ld, 1) == ld[0]
    assert rel(power_derivative(ld, 2), 2 * ld[0] * ld[1]) < 1e-55
    with pytest.raises(ValueError):
        power_derivative(ld, 3)


@pytest.mark.parametrize("n", range(1, 8))
def test_grouped_sum_equals_composition_sum(n):
    # arbitrary rationals stand in for L^(j)(a)
    ld = [Fraction(3 * j + 1, 2 * j + 5) * (-1) ** j for j in range(n)]
    literal = Fraction(0)
    for comp in enumerate_compositions(n):
        term = Fraction(multinomial(n - 1, comp))
        for part in comp:
            term *= ld[part]
        literal += term
    assert power_derivative(ld, n) == literal


def test_power_derivative_n4_against_series(cfg50):
    ld = l_derivatives("3/2", 3, cfg50)
    kernel = one_over(slope_series("3/2", 3, cfg50))
    ref = ps_pow(kernel, 4).coeffs[3] * 6
    assert abs((power_derivative(ld, 4) - ref).value) <= mpmath.mpf(10) ** -38


@pytest.mark.parametrize("a", ["1", "3/2"])
def test_two_routes_agree(a, cfg50):
    ld = l_derivatives(a, 7, cfg50)
    inv = lagrange_invert(a, slope_series(a, 7, cfg50))
    for n in range(1, 9):
        via_series = inv.coeffs[n] * math.factorial(n)
        assert rel(power_derivative(ld, n), via_series) <= 1e-35


def test_exact_arithmetic_independent_of_precision():
    assert enumerate_compositions(4) == enumerate_compositions(4)
    assert isinstance(multinomial(9, (3, 3, 3)), int)
