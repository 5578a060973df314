"""Truncated Taylor series about an anchor and Lagrange inversion.

A :class:`PowerSeries` holds ``c_0 .. c_N`` for ``sum c_k h**k`` with
``h = z - anchor``.  Coefficients beyond ``N`` are unknown rather than zero,
so binary operations truncate to the smaller order.

The inversion works on the *slope* of ``f`` at ``a``,

    M(h) = (f(a + h) - f(a)) / h,

which is analytic and nonzero at ``h = 0`` whenever ``f'(a) != 0``.  The
kernel ``(z - a)/(f(z) - f(a))`` is then just ``1/M`` and the n-th inverse
coefficient is ``(n-1)! [h^(n-1)] M(h)**-n``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .specfun import BigReal, PrecisionConfig, Real, polygamma, to_bigreal

__all__ = [
    "PowerSeries",
    "lagrange_invert",
    "ps_div",
    "ps_mul",
    "ps_pow",
    "slope_series",
]

DEFAULT_ORDER = 8


@dataclass(frozen=True)
class PowerSeries:
    anchor: BigReal
    coeffs: tuple

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a power series needs at least one coefficient")
        object.__setattr__(self, "coeffs", tuple(self.coeffs))

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[Real], anchor: Real = 0, precision: int = 50):
        """Build from plain numbers (ints, Fractions, ``"p/q"`` strings, ...)."""
        return cls(
            to_bigreal(anchor, precision),
            tuple(to_bigreal(c, precision) for c in coeffs),
        )

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int):
        return self.coeffs[k]

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise ValueError(f"cannot raise order {self.order} to {order}")
        return PowerSeries(self.anchor, self.coeffs[: order + 1])

    def partial_sums(self, x) -> list:
        """Cumulative sums ``sum_{k<=n} c_k x**k`` for n = 0..order."""
        out = []
        acc = self.coeffs[0]
        xk = 1
        out.append(acc)
        for c in self.coeffs[1:]:
            xk = xk * x
            acc = acc + c * xk
            out.append(acc)
        return out

    def __call__(self, x):
        return self.partial_sums(x)[-1]


def _check_anchors(p: PowerSeries, q: PowerSeries) -> None:
    if p.anchor != q.anchor:
        raise ValueError(f"anchor mismatch: {p.anchor} vs {q.anchor}")


def ps_mul(p: PowerSeries, q: PowerSeries) -> PowerSeries:
    """Cauchy product truncated to the smaller order."""
    _check_anchors(p, q)
    n = min(p.order, q.order)
    out = []
    for k in range(n + 1):
        acc = p.coeffs[0] * q.coeffs[k]
        for i in range(1, k + 1):
            acc = acc + p.coeffs[i] * q.coeffs[k - i]
        out.append(acc)
    return PowerSeries(p.anchor, tuple(out))


def ps_div(p: PowerSeries, q: PowerSeries) -> PowerSeries:
    """Series r with r*q == p up to the common order."""
    _check_anchors(p, q)
    q0 = q.coeffs[0]
    if q0 == 0:
        raise ZeroDivisionError("non-unit divisor: constant term is zero")
    n = min(p.order, q.order)
    out = []
    for k in range(n + 1):
        acc = p.coeffs[k]
        for j in range(1, k + 1):
            acc = acc - q.coeffs[j] * out[k - j]
        out.append(acc / q0)
    return PowerSeries(p.anchor, tuple(out))


def ps_pow(p: PowerSeries, n: int) -> PowerSeries:
    """p**n by binary exponentiation, order unchanged."""
    if n < 1:
        raise ValueError(f"exponent must be a positive integer, got {n}")
    result = None
    base = p
    while n:
        if n & 1:
            result = base if result is None else ps_mul(result, base)
        n >>= 1
        if n:
            base = ps_mul(base, base)
    return result


def slope_series(a: Real, order: int = DEFAULT_ORDER, cfg: PrecisionConfig = PrecisionConfig()) -> PowerSeries:
    """(psi(a+h) - psi(a))/h about h = 0, i.e. m_j = psi^(j+1)(a)/(j+1)!."""
    if order < 0:
        raise ValueError("order must be >= 0")
    anchor = to_bigreal(a, cfg.digits)
    coeffs = tuple(
        polygamma(j + 1, anchor, cfg) / math.factorial(j + 1) for j in range(order + 1)
    )
    return PowerSeries(anchor, coeffs)


def lagrange_invert(a: Real, f_slope: PowerSeries, order: int | None = None) -> PowerSeries:
    """Inverse series of f about a, in the offset variable ``w - f(a)``.

    Returns g with ``g[0] = a`` and ``g[n] = h_n / n!`` where
    ``h_n = (n-1)! [h^(n-1)] (1/M)**n`` and M is ``f_slope``.  Evaluate it with
    ``g.partial_sums(w - f(a))``.  The result's anchor is 0, the expansion
    point in the offset variable.
    """
    if order is None:
        order = f_slope.order + 1
    if order < 0 or order > f_slope.order + 1:
        raise ValueError(f"order must lie in 0..{f_slope.order + 1}, got {order}")
    if f_slope.coeffs[0] == 0:
        raise ZeroDivisionError("inversion undefined (f'(a)=0)")
    prec = f_slope.coeffs[0].precision
    coeffs = [to_bigreal(a, prec)]
    if order == 0:
        return PowerSeries(to_bigreal(0, prec), tuple(coeffs))
    m = f_slope.truncate(order - 1)
    one = PowerSeries(m.anchor, (to_bigreal(1, prec),) + (to_bigreal(0, prec),) * (order - 1))
    kernel = ps_div(one, m)
    power = kernel
    for n in range(1, order + 1):
        if n > 1:
            power = ps_mul(power, kernel)
        coeffs.append(power.coeffs[n - 1] / n)
    return PowerSeries(to_bigreal(0, prec), tuple(coeffs))
