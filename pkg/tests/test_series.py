import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from mpmath import mp

from lagrangemin.series import PowerSeries, lagrange_invert, ps_div, ps_mul, ps_pow, slope_series
from lagrangemin.specfun import PrecisionConfig, polygamma, riemann_zeta

from oracles import compose, machin_pi


def series(*coeffs, anchor=0):
    return PowerSeries.from_coeffs(coeffs, anchor=anchor)


def assert_coeffs(p, expected, tol=Fraction(1, 10**45)):
    assert p.order == len(expected) - 1
    for c, e in zip(p.coeffs, expected):
        assert abs(c.to_fraction() - Fraction(e)) <= tol, (c, e)


def exp_slope(order):
    # (e^h - 1)/h = sum h^k/(k+1)!
    return series(*[Fraction(1, math.factorial(k + 1)) for k in range(order + 1)])


def test_power_series_invariants():
    p = series(1, 2, 3)
    assert p.order == 2
    assert len(p.coeffs) == p.order + 1
    with pytest.raises(ValueError):
        PowerSeries(p.anchor, ())
    assert p.truncate(1).order == 1
    with pytest.raises(ValueError):
        p.truncate(3)


def test_mul_difference_of_squares():
    assert_coeffs(ps_mul(series(1, 1, 0), series(1, -1, 0)), [1, 0, -1])


def test_mul_identity():
    p = series(3, "1/7", -2)
    assert ps_mul(p, series(1, 0, 0)).coeffs == p.coeffs


def test_mul_exp_squared():
    e = series(*[Fraction(1, math.factorial(k)) for k in range(5)])
    assert_coeffs(ps_mul(e, e), [1, 2, 2, Fraction(4, 3), Fraction(2, 3)])


def test_mul_truncates_to_min_order():
    assert ps_mul(series(1, 1, 1, 1), series(1, 1)).order == 1


def test_anchor_mismatch():
    with pytest.raises(ValueError, match="anchor"):
        ps_mul(series(1, 1), series(1, 1, anchor=1))
    with pytest.raises(ValueError, match="anchor"):
        ps_div(series(1, 1), series(1, 1, anchor="3/2"))


def test_div_geometric():
    assert_coeffs(ps_div(series(1, 0, 0, 0, 0), series(1, -1, 0, 0, 0)), [1] * 5)


def test_div_self():
    p = series(2, "1/3", -5, 7)
    assert_coeffs(ps_div(p, p), [1, 0, 0, 0])


def test_div_hand_expansion():
    assert_coeffs(ps_div(series(1, 0, 0), series(2, 3, 0)), [Fraction(1, 2), Fraction(-3, 4), Fraction(9, 8)])


def test_div_non_unit():
    with pytest.raises(ZeroDivisionError, match="non-unit divisor"):
        ps_div(series(1, 1), series(0, 1))


@settings(max_examples=40, deadline=None)
@given(
    st.lists(st.fractions(-5, 5, max_denominator=50), min_size=1, max_size=10),
    st.lists(st.fractions(-5, 5, max_denominator=50), min_size=1, max_size=10),
)
def test_div_mul_roundtrip(pc, qc):
    if qc[0] == 0:
        qc[0] = Fraction(1, 3)
    n = min(len(pc), len(qc))
    p, q = series(*pc[:n]), series(*qc[:n])
    back = ps_mul(ps_div(p, q), q)
    for c, e in zip(back.coeffs, pc):
        # digits - 8 in absolute terms
        assert abs(c.to_fraction() - e) <= Fraction(1, 10**42)


def test_pow_identity_and_binomial():
    p = series(1, 1, 0, 0)
    assert ps_pow(p, 1) is p
    assert_coeffs(ps_pow(p, 3), [1, 3, 3, 1])
    assert_coeffs(ps_pow(series(1, 1, 0, 0, 0, 0), 5), [1, 5, 10, 10, 5, 1])
    with pytest.raises(ValueError):
        ps_pow(p, 0)


@pytest.mark.parametrize("n", range(1, 9))
def test_pow_matches_repeated_mul(n):
    p = series(2, "-1/3", "5/7", 1, "1/11")
    ref = p
    for _ in range(n - 1):
        ref = ps_mul(ref, p)
    assert_coeffs(ps_pow(p, n), [c.to_fraction() for c in ref.coeffs], tol=Fraction(1, 10**40))


def test_kernel_square_at_three_halves(cfg50):
    m = slope_series(Fraction(3, 2), 4, cfg50)
    kernel = ps_div(series(1, 0, 0, 0, 0, anchor="3/2"), m)
    sq = ps_pow(kernel, 2)
    with mp.workdps(70):
        q = machin_pi(80)
        pi = mp.mpf(q.numerator) / q.denominator
        target = (2 / (pi**2 - 8)) ** 2
        assert abs(sq.coeffs[0].value - target) / target < mpmath.mpf(10) ** -48


def test_slope_series_at_one(cfg50):
    m = slope_series(1, 3, cfg50)
    assert m.coeffs[0] == riemann_zeta(2, cfg50)
    assert abs((m.coeffs[1] + riemann_zeta(3, cfg50)).value) < mpmath.mpf(10) ** -55
    assert m.anchor == 1


def test_slope_series_at_three_halves(cfg50):
    m = slope_series("3/2", 0, cfg50)
    with mp.workdps(70):
        q = machin_pi(80)
        pi = mp.mpf(q.numerator) / q.denominator
        assert abs(m.coeffs[0].value - (pi**2 - 8) / 2) < mpmath.mpf(10) ** -49


@pytest.mark.parametrize("a", ["1/10", "1", "3/2", "7"])
def test_slope_leading_coefficient_positive(a, cfg50):
    m = slope_series(a, 5, cfg50)
    assert m.coeffs[0] > 0
    for j, c in enumerate(m.coeffs):
        assert c == polygamma(j + 1, a, cfg50) / math.factorial(j + 1)


def test_invert_exp_gives_log1p():
    g = lagrange_invert(0, exp_slope(4))
    assert_coeffs(g, [0, 1, Fraction(-1, 2), Fraction(1, 3), Fraction(-1, 4), Fraction(1, 5)])


def test_invert_identity():
    g = lagrange_invert("5/2", series(1, 0, 0, 0))
    assert_coeffs(g, [Fraction(5, 2), 1, 0, 0, 0])


def test_invert_psi_three_halves_leading(cfg50):
    g = lagrange_invert("3/2", slope_series("3/2", 3, cfg50))
    with mp.workdps(70):
        q = machin_pi(80)
        pi = mp.mpf(q.numerator) / q.denominator
        assert abs(g.coeffs[1].value - 2 / (pi**2 - 8)) < mpmath.mpf(10) ** -49


@pytest.mark.parametrize("a", ["1", "3/2", "1/3", "4"])
def test_first_coefficient_is_reciprocal_slope(a, cfg50):
    g = lagrange_invert(a, slope_series(a, 2, cfg50))
    assert abs((g.coeffs[1] * polygamma(1, a, cfg50) - 1).value) < mpmath.mpf(10) ** -55


def test_invert_zero_slope():
    with pytest.raises(ZeroDivisionError, match=r"f'\(a\)=0"):
        lagrange_invert(0, series(0, 1, 1))


def test_invert_order_bounds():
    s = exp_slope(3)
    assert lagrange_invert(0, s, 0).order == 0
    with pytest.raises(ValueError):
        lagrange_invert(0, s, 5)


def _roundtrip_residual(slope, a, order):
    g = lagrange_invert(a, slope, order)
    with mp.workdps(80):
        forward = [mp.mpf(0)] + [c.value for c in slope.coeffs[:order]]  # w = h M(h)
        inverse = [mp.mpf(0)] + [c.value for c in g.coeffs[1:]]  # g(w) - a
        ident = compose(inverse, forward, order)
        ident[1] -= 1
        return max(abs(c) for c in ident)


@pytest.mark.parametrize("order", [4, 8, 12])
def test_roundtrip_exp(order):
    assert _roundtrip_residual(exp_slope(order), 0, order) <= mpmath.mpf(10) ** -38


@pytest.mark.parametrize("a", ["1", "3/2"])
def test_roundtrip_psi(a, cfg50):
    order = 12
    assert _roundtrip_residual(slope_series(a, order, cfg50), a, order) <= mpmath.mpf(10) ** -38


def test_partial_sums():
    p = series(1, 2, 3)
    sums = p.partial_sums(Fraction(1, 2))
    assert [s.to_fraction() for s in sums] == [1, 2, Fraction(11, 4)]
    assert p(Fraction(1, 2)).to_fraction() == Fraction(11, 4)


def test_precision_flows_from_cfg():
    cfg = PrecisionConfig(30)
    m = slope_series("3/2", 3, cfg)
    assert {c.precision for c in m.coeffs} == {30}
    assert {c.precision for c in lagrange_invert("3/2", m).coeffs} == {30}
