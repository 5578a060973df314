"""Arbitrary-precision constants and special functions.

Everything here is evaluated with mpmath floating point at ``digits + guard``
decimal digits and handed back as :class:`BigReal` tagged with ``digits``.

    >>> cfg = PrecisionConfig(digits=20)
    >>> print(digamma(1, cfg).to_str(20))
    -0.57721566490153286061
"""

from __future__ import annotations

import math
import threading
from contextlib import contextmanager
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

import mpmath
import numpy as np
from mpmath import mp

__all__ = [
    "BigReal",
    "DomainError",
    "PrecisionConfig",
    "bernoulli_numbers",
    "constants",
    "digamma",
    "digamma_reference",
    "format_fixed",
    "format_sig",
    "hurwitz_zeta",
    "polygamma",
    "riemann_zeta",
    "to_bigreal",
    "workdps",
]

MIN_DIGITS = 16
ARITH_GUARD = 10

# mpmath keeps its precision in one global context; serialize every change.
_MP_LOCK = threading.RLock()


@contextmanager
def workdps(dps: int) -> Iterator[None]:
    """Run a block at ``dps`` decimal digits, holding the mpmath lock."""
    with _MP_LOCK, mp.workdps(dps):
        yield


class DomainError(ValueError):
    """Argument outside the domain of a special function."""


@dataclass(frozen=True)
class PrecisionConfig:
    digits: int = 50
    guard: int = 10

    def __post_init__(self):
        if self.digits < MIN_DIGITS:
            raise ValueError(f"digits must be >= {MIN_DIGITS}, got {self.digits}")
        if self.guard < 5:
            raise ValueError(f"guard must be >= 5, got {self.guard}")

    @property
    def working_dps(self) -> int:
        return self.digits + self.guard


Real = Union["BigReal", int, Fraction, str, float, mpmath.mpf]


class BigReal:
    """An mpmath real tagged with the number of decimal digits it is good to.

    Arithmetic between two BigReals keeps the smaller tag and is carried out
    at ``tag + ARITH_GUARD`` digits.  Plain ints and Fractions are treated as
    exact and do not lower the tag.
    """

    __slots__ = ("value", "precision")

    def __init__(self, value, precision: int):
        if precision < MIN_DIGITS:
            raise ValueError(f"precision must be >= {MIN_DIGITS}, got {precision}")
        if not isinstance(value, mpmath.mpf):
            with workdps(precision + ARITH_GUARD):
                value = _to_mpf(value)
        self.value = value
        self.precision = int(precision)

    # -- arithmetic -------------------------------------------------------

    def _binop(self, other, op):
        if isinstance(other, BigReal):
            prec = min(self.precision, other.precision)
            rhs = other.value
        elif isinstance(other, (int, Fraction, mpmath.mpf)):
            prec = self.precision
            rhs = other
        else:
            return NotImplemented
        with workdps(prec + ARITH_GUARD):
            if isinstance(rhs, Fraction):
                rhs = _to_mpf(rhs)
            return BigReal(op(self.value, rhs), prec)

    def __add__(self, other):
        return self._binop(other, lambda x, y: x + y)

    def __radd__(self, other):
        return self._binop(other, lambda x, y: y + x)

    def __sub__(self, other):
        return self._binop(other, lambda x, y: x - y)

    def __rsub__(self, other):
        return self._binop(other, lambda x, y: y - x)

    def __mul__(self, other):
        return self._binop(other, lambda x, y: x * y)

    def __rmul__(self, other):
        return self._binop(other, lambda x, y: y * x)

    def __truediv__(self, other):
        return self._binop(other, lambda x, y: x / y)

    def __rtruediv__(self, other):
        return self._binop(other, lambda x, y: y / x)

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        with workdps(self.precision + ARITH_GUARD):
            return BigReal(self.value**n, self.precision)

    def __neg__(self):
        with workdps(self.precision + ARITH_GUARD):
            return BigReal(-self.value, self.precision)

    def __pos__(self):
        return self

    def __abs__(self):
        with workdps(self.precision + ARITH_GUARD):
            return BigReal(abs(self.value), self.precision)

    # -- comparison -------------------------------------------------------

    def _cmpval(self, other):
        if isinstance(other, BigReal):
            return other.value
        if isinstance(other, Fraction):
            with workdps(self.precision + ARITH_GUARD):
                return _to_mpf(other)
        return other

    def __eq__(self, other):
        if not isinstance(other, (BigReal, int, Fraction, float, mpmath.mpf)):
            return NotImplemented
        return self.value == self._cmpval(other)

    def __hash__(self):
        return hash(self.value)

    def __lt__(self, other):
        return self.value < self._cmpval(other)

    def __le__(self, other):
        return self.value <= self._cmpval(other)

    def __gt__(self, other):
        return self.value > self._cmpval(other)

    def __ge__(self, other):
        return self.value >= self._cmpval(other)

    # -- conversion -------------------------------------------------------

    def __float__(self):
        return float(self.value)

    def __bool__(self):
        return bool(self.value)

    def to_fraction(self) -> Fraction:
        """Exact rational value of the underlying binary float."""
        sign, man, exp, _ = self.value._mpf_
        if not man and exp:
            raise ValueError(f"cannot convert {self.value} to a fraction")
        man = -man if sign else man
        if exp >= 0:
            return Fraction(man * 2**exp)
        return Fraction(man, 2**-exp)

    def rounded(self, digits: int | None = None) -> "BigReal":
        """Narrow to ``digits`` significant digits, round-half-even."""
        digits = self.precision if digits is None else digits
        text = _sig_digits(self.to_fraction(), digits, scientific=True)
        return BigReal(text, max(digits, MIN_DIGITS))

    def to_str(self, digits: int | None = None) -> str:
        return format_sig(self, self.precision if digits is None else digits)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"BigReal('{self.to_str()}', precision={self.precision})"


def _to_mpf(x) -> mpmath.mpf:
    """Convert at the current mpmath precision; strings may be ``p/q``."""
    if isinstance(x, BigReal):
        return +x.value
    if isinstance(x, str):
        x = Fraction(x.strip())
    if isinstance(x, Fraction):
        return mp.mpf(x.numerator) / x.denominator
    return mp.mpf(x)


def to_bigreal(x: Real, precision: int) -> BigReal:
    """Coerce ``x`` to a BigReal; decimal and ``p/q`` strings are parsed exactly."""
    if isinstance(x, BigReal):
        return x
    return BigReal(x, precision)


# -- formatting ---------------------------------------------------------------


def _as_fraction(x) -> Fraction:
    if isinstance(x, BigReal):
        return x.to_fraction()
    if isinstance(x, mpmath.mpf):
        return BigReal(x, MIN_DIGITS).to_fraction()
    return Fraction(x)


def _decimal_exponent(q: Fraction) -> int:
    """floor(log10(|q|)) for nonzero q, computed exactly."""
    q = abs(q)
    e = len(str(q.numerator)) - len(str(q.denominator))
    while q >= Fraction(10) ** (e + 1):
        e += 1
    while q < Fraction(10) ** e:
        e -= 1
    return e


def _round_sig(q: Fraction, digits: int) -> tuple[int, int]:
    """Integer mantissa of ``digits`` digits and decimal exponent of q."""
    e = _decimal_exponent(q)
    n = round(q * Fraction(10) ** (digits - 1 - e))  # Fraction rounds half-even
    if abs(n) == 10**digits:  # rounding carried into a new decade
        e += 1
        n = round(q * Fraction(10) ** (digits - 1 - e))
    return n, e


def _sig_digits(q: Fraction, digits: int, scientific: bool | None = None) -> str:
    if q == 0:
        return "0." + "0" * (digits - 1) if digits > 1 else "0"
    n, e = _round_sig(q, digits)
    if scientific is None:
        scientific = not -3 <= e < 3
    sign = "-" if n < 0 else ""
    mant = str(abs(n))
    if scientific:
        body = mant[0] + ("." + mant[1:] if digits > 1 else "")
        return f"{sign}{body}e{e:+03d}"
    point = e + 1
    if point <= 0:
        body = "0." + "0" * (-point) + mant
    elif point >= digits:
        body = mant + "0" * (point - digits)
    else:
        body = mant[:point] + "." + mant[point:]
    return sign + body


def format_sig(x, digits: int) -> str:
    """Significant-digit rendering, round-half-even.

    Values whose rounded magnitude lies in [1e-3, 1e3) (and zero) are written
    positionally, anything else in exponent form such as ``9.874257249e-17``.
    """
    return _sig_digits(_as_fraction(x), digits)


def format_fixed(x, decimals: int) -> str:
    """Fixed-point rendering with ``decimals`` places, round-half-even; no ``-0``."""
    q = _as_fraction(x)
    n = round(q * 10**decimals)
    sign = "-" if n < 0 else ""
    s = str(abs(n)).rjust(decimals + 1, "0")
    if decimals == 0:
        return sign + s
    return f"{sign}{s[:-decimals]}.{s[-decimals:]}"


# -- constants ----------------------------------------------------------------


def constants(cfg: PrecisionConfig = PrecisionConfig()) -> dict[str, BigReal]:
    """Euler's gamma, pi and ln 2 to ``cfg.digits`` digits."""
    with workdps(cfg.working_dps):
        return {
            "gamma": BigReal(+mp.euler, cfg.digits),
            "pi": BigReal(+mp.pi, cfg.digits),
            "ln2": BigReal(+mp.ln2, cfg.digits),
        }


_BERNOULLI: list[Fraction] = [Fraction(1)]
_BERNOULLI_LOCK = threading.Lock()


def _extend_bernoulli(upto: int) -> None:
    # B_m = -1/(m+1) * sum_{k<m} C(m+1, k) B_k
    with _BERNOULLI_LOCK:
        for m in range(len(_BERNOULLI), upto + 1):
            acc = Fraction(0)
            binom = 1
            for k in range(m):
                acc += binom * _BERNOULLI[k]
                binom = binom * (m + 1 - k) // (k + 1)
            _BERNOULLI.append(-acc / (m + 1))


def bernoulli_numbers(count: int) -> list[Fraction]:
    """Exact B_0 .. B_{2*count}, with the convention B_1 = -1/2."""
    if count < 1:
        raise ValueError("count must be >= 1")
    if len(_BERNOULLI) <= 2 * count:
        _extend_bernoulli(2 * count)
    return _BERNOULLI[: 2 * count + 1]


def _bernoulli(index: int) -> Fraction:
    if len(_BERNOULLI) <= index:
        _extend_bernoulli(index + 16)
    return _BERNOULLI[index]


# -- zeta ---------------------------------------------------------------------


def _check_order(u) -> int:
    if isinstance(u, bool) or not isinstance(u, (int, np.integer)) or u < 2:
        raise DomainError(f"zeta order must be an integer >= 2, got {u!r}")
    return int(u)


def _hurwitz_mpf(u: int, v: mpmath.mpf, dps: int) -> mpmath.mpf:
    """Direct sum up to a shifted argument, then an Euler-Maclaurin tail.

    Called with mpmath already at ``dps`` digits.
    """
    shift = max(0, math.ceil(max(u, dps) - v))
    total = mp.fsum((k + v) ** -u for k in range(shift))
    x = v + shift
    tail = x ** (1 - u) / (u - 1) + x**-u / 2
    eps = mp.mpf(10) ** -dps * (total + tail)
    # B_{2j}/(2j)! * u(u+1)...(u+2j-2) * x^(-u-2j+1)
    rising = mp.mpf(u)
    xpow = x ** (-u - 1)
    fact = mp.mpf(2)
    x2 = x * x
    j = 1
    prev = None
    while True:
        term = _to_mpf(_bernoulli(2 * j)) / fact * rising * xpow
        if prev is not None and abs(term) > abs(prev):
            raise ArithmeticError("Euler-Maclaurin tail diverged")  # shift too small
        tail += term
        if abs(term) < eps:
            break
        prev = term
        rising *= (u + 2 * j - 1) * (u + 2 * j)
        fact *= (2 * j + 1) * (2 * j + 2)
        xpow /= x2
        j += 1
    return total + tail


def hurwitz_zeta(u: int, v: Real, cfg: PrecisionConfig = PrecisionConfig()) -> BigReal:
    """sum_{k>=0} (k + v)^(-u) for integer u >= 2 and v > 0."""
    u = _check_order(u)
    with workdps(cfg.working_dps):
        vv = _to_mpf(v)
        if vv <= 0:
            raise DomainError(f"Hurwitz zeta needs v > 0, got {v}")
        return BigReal(_hurwitz_mpf(u, vv, cfg.working_dps), cfg.digits)


def riemann_zeta(u: int, cfg: PrecisionConfig = PrecisionConfig()) -> BigReal:
    return hurwitz_zeta(u, 1, cfg)


# -- digamma ------------------------------------------------------------------


def _digamma_mpf(z: mpmath.mpf, dps: int) -> mpmath.mpf:
    # Asymptotic terms B_2k/(2k x^2k) bottom out near exp(-2*pi*x); with
    # x >= dps*ln(10)/pi that floor is 10^(-2*dps), reached in O(dps) terms.
    threshold = math.ceil(dps * math.log(10) / math.pi)
    shift = 0
    acc = mp.mpf(0)
    x = z
    while x < threshold:
        acc -= 1 / x
        x += 1
        shift += 1
    value = mp.log(x) - 1 / (2 * x)
    eps = mp.mpf(10) ** -dps * max(1, abs(value))
    x2 = x * x
    xpow = x2
    k = 1
    while True:
        term = _to_mpf(_bernoulli(2 * k)) / (2 * k * xpow)
        value -= term
        if abs(term) < eps:
            break
        xpow *= x2
        k += 1
        if k > 4 * dps:
            raise ArithmeticError("digamma asymptotic series did not settle")
    return value + acc


def digamma(z: Real, cfg: PrecisionConfig = PrecisionConfig()) -> BigReal:
    """psi(z) = Gamma'(z)/Gamma(z) for z > 0."""
    with workdps(cfg.working_dps):
        zz = _to_mpf(z)
        if zz <= 0:
            raise DomainError(f"digamma is only implemented for z > 0, got {z}")
        return BigReal(_digamma_mpf(zz, cfg.working_dps), cfg.digits)


def digamma_reference(z: Real, terms: int = 10**6) -> BigReal:
    """Partial sum of -gamma + sum_{n<terms} (1/(n+1) - 1/(n+z)) in doubles.

    A slow, low-precision oracle for :func:`digamma`.  The neglected tail is
    about (z - 1)/terms, so with a million terms expect roughly six digits.
    """
    if terms < 100:
        raise ValueError("terms must be >= 100")
    zf = float(z) if not isinstance(z, str) else float(Fraction(z))
    if zf <= 0:
        raise DomainError(f"digamma is only implemented for z > 0, got {z}")
    n = np.arange(terms, dtype=np.float64)
    s = math.fsum(1.0 / (n + 1.0) - 1.0 / (n + zf))
    return BigReal(s - float(mp.euler), MIN_DIGITS)


def polygamma(n: int, z: Real, cfg: PrecisionConfig = PrecisionConfig()) -> BigReal:
    """psi^(n)(z) = (-1)^(n+1) n! zeta(n+1, z), n >= 1."""
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 1:
        raise DomainError(f"polygamma order must be an integer >= 1, got {n!r}")
    n = int(n)
    zeta = hurwitz_zeta(n + 1, z, cfg)
    sign = 1 if n % 2 else -1
    return zeta * (sign * math.factorial(n))
