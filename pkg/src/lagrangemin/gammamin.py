"""Location of the minimum of Gamma as a Lagrange-inversion series.

The minimum ``x0 = 1.4616321449...`` is the positive root of psi.  Inverting
``w = psi(z)`` about an anchor ``a`` and evaluating at ``w = 0`` gives

    x0 = a + sum_n h_n / n! * (-psi(a))**n

with ``h_n = (n-1)! [h^(n-1)] M(h)**-n``.  :func:`expand` computes the terms
with either engine (series reversion or Faa di Bruno sums).  The remaining
functions evaluate the closed forms printed for anchors 1 and 3/2, rebuild the
two published convergence tables and audit them against the engines and an
independent Newton root.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import combinatorics, series
from .specfun import (
    BigReal,
    DomainError,
    PrecisionConfig,
    Real,
    constants,
    digamma,
    polygamma,
    riemann_zeta,
    to_bigreal,
)

__all__ = [
    "METHODS",
    "TABLE1_VALUES",
    "TABLE2_VALUES",
    "AuditRecord",
    "ExpansionResult",
    "TableReport",
    "TableRow",
    "discrepancy_report",
    "expand",
    "printed_q_terms",
    "printed_r_coefficients",
    "psi_root",
    "table",
]

METHODS = ("reversion", "faadibruno")

# Published values, verbatim.
TABLE1_VALUES = (
    "1.213324688",
    "1.303306712",
    "1.433026242",
    "1.465429144",
    "1.471535623",
    "1.472388063",
)
TABLE2_VALUES = ("1.460965032", "1.461640502", "1.461632068")
REFERENCE_ROOT = "1.4616321449683623413"

TABLE1_LABELS = tuple(
    "1" + "".join(f"+r{i}*gamma" + (f"^{i}" if i > 1 else "") for i in range(1, n + 1))
    for n in range(1, 7)
)
TABLE2_LABELS = ("3/2+q1", "3/2+q1+q2", "3/2+q1+q2+q3")

TABLE_DIGITS = 20

TABLE1_NOTE = (
    "Rows are 1 + sum_{i<=n} r_i*gamma^i with r_i evaluated from the printed "
    "closed forms. Rows 1-2 reproduce the published values; rows 3-6 do not, "
    "and also differ from the reversion series about a=1 (which starts at "
    "1 + gamma/zeta(2))."
)
TABLE2_NOTE = (
    "Rows are cumulative partial sums of the per-order reversion terms about "
    "a=3/2. The printed q_2 and q_3 definitions are not used here: q_2 repeats "
    "the first-order term and q_3 carries (7*zeta(3)-8)^3 and pi^2-96 where "
    "third-order inversion gives a square and pi^4-96."
)

AUDIT_NOTES = (
    "Table 1 rows 3-6 match neither the printed r_3..r_6 nor the reversion "
    "series about a=1; row 3 exceeds the printed-r_3 partial sum by about "
    "r_3*gamma^3*(zeta(2)^4 - 1).",
    "The printed r_1 = 1/zeta(2)^2 differs from the first inversion "
    "coefficient 1/psi'(1) = 1/zeta(2); Table 1 rows 1-2 follow the printed "
    "formulas.",
    "Printed q_2 includes q_1 again, so 3/2 + q_1 + q_2 as typeset counts the "
    "first-order term twice; Table 2 is reproduced by per-order terms.",
    "Printed q_3 uses pi^2 - 96 where psi'''(3/2) = pi^4 - 96, and "
    "(7*zeta(3) - 8)^3 where third-order inversion has a square.",
    "The kernel is taken as (z - a)/(psi(z) - psi(a)); the printed "
    "denominator psi(z) - a agrees only when psi(a) = a.",
)


@dataclass(frozen=True)
class ExpansionResult:
    """Terms t_n = h_n/n! * offset**n and partial sums a + t_1 + ... + t_n."""

    anchor: BigReal
    method: str
    offset: BigReal
    h: tuple = ()
    terms: tuple = ()
    partial_sums: tuple = ()

    @property
    def order(self) -> int:
        return len(self.terms)

    @property
    def coefficients(self) -> tuple:
        """h_n / n!."""
        return tuple(h / math.factorial(n) for n, h in enumerate(self.h, 1))


@dataclass(frozen=True)
class TableRow:
    label: str
    computed: BigReal
    paper_value: BigReal
    delta: BigReal


@dataclass(frozen=True)
class TableReport:
    table_id: int
    rows: tuple
    method_note: str


@dataclass(frozen=True)
class AuditRecord:
    """Signed comparison ``delta = lhs - rhs``."""

    anchor: str
    order: int
    lhs_name: str
    lhs: BigReal
    rhs_name: str
    rhs: BigReal
    delta: BigReal = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "delta", self.lhs - self.rhs)


def psi_root(cfg: PrecisionConfig = PrecisionConfig()) -> BigReal:
    """Positive root of psi by Newton's method kept inside a bisection bracket."""
    lo = to_bigreal("1.2", cfg.digits)
    hi = to_bigreal("1.8", cfg.digits)
    if not (digamma(lo, cfg) < 0 < digamma(hi, cfg)):
        raise ArithmeticError("psi does not change sign on [1.2, 1.8]")
    tol = to_bigreal(Fraction(1, 10 ** (cfg.digits + 3)), cfg.digits)
    # Newton steps run at the working precision so the residual can drop
    # below 10^-(digits+3).
    inner = PrecisionConfig(cfg.working_dps, cfg.guard)
    x = to_bigreal("1.5", inner.digits)
    for _ in range(200):
        fx = digamma(x, inner)
        if fx < 0:
            lo = x
        else:
            hi = x
        step = fx / polygamma(1, x, inner)
        new = x - step
        if not (lo < new < hi):
            new = (lo + hi) / 2
            step = x - new
        x = new
        if abs(fx) < tol and abs(step) < tol:
            return BigReal(x.value, cfg.digits)
    raise ArithmeticError("psi_root did not converge in 200 iterations")


def expand(
    a: Real, order: int, method: str = "reversion", cfg: PrecisionConfig = PrecisionConfig()
) -> ExpansionResult:
    """Inversion series for the root of psi about ``a``, through ``order`` terms."""
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}, got {method!r}")
    if order < 0:
        raise ValueError("order must be >= 0")
    anchor = to_bigreal(a, cfg.digits)
    if anchor <= 0:
        raise DomainError(f"anchor must be positive, got {a}")
    offset = -digamma(anchor, cfg)
    if order == 0:
        return ExpansionResult(anchor, method, offset)

    if method == "reversion":
        slope = series.slope_series(anchor, order - 1, cfg)
        inverse = series.lagrange_invert(anchor, slope, order)
        h = [c * math.factorial(n) for n, c in enumerate(inverse.coeffs[1:], 1)]
    else:
        lder = combinatorics.l_derivatives(anchor, order - 1, cfg)
        h = [combinatorics.power_derivative(lder, n) for n in range(1, order + 1)]

    terms = []
    sums = []
    acc = anchor
    wn = 1
    for n, hn in enumerate(h, 1):
        wn = wn * offset
        t = hn / math.factorial(n) * wn
        acc = acc + t
        terms.append(t)
        sums.append(acc)
    return ExpansionResult(anchor, method, offset, tuple(h), tuple(terms), tuple(sums))


def printed_r_coefficients(cfg: PrecisionConfig = PrecisionConfig()) -> list[BigReal]:
    """r_1..r_6 of the expansion in powers of gamma, as typeset."""
    z = {u: riemann_zeta(u, cfg) for u in range(2, 9)}
    F = Fraction
    r1 = 1 / z[2] ** 2
    r2 = z[3] / z[2] ** 3
    r3 = (2 * z[3] ** 2 / z[2] - z[4]) / z[2] ** 4
    r4 = (-2 * z[2] * z[3] + 2 * z[3] ** 2 / z[4] + z[5]) / z[2] ** 5
    r5 = (
        -F(42, 5) * z[3] ** 2
        + F(16, 5) * z[3] ** 4 / z[6]
        + 6 * z[3] * z[5] / z[2]
        + F(11, 10) * z[6]
    ) / z[2] ** 6
    r6 = (
        F(36, 5) * z[3] * z[4]
        - 168 * z[3] ** 2 / z[2]
        + F(144, 25) * z[3] ** 5 / z[8]
        - F(14, 5) * z[2] * z[5]
        + F(56, 5) * z[3] ** 2 * z[5] / z[4]
        + z[7]
    ) / z[2] ** 7
    return [r1, r2, r3, r4, r5, r6]


def _eta(cfg: PrecisionConfig) -> BigReal:
    c = constants(cfg)
    return -2 + c["gamma"] + 2 * c["ln2"]


def printed_q_terms(cfg: PrecisionConfig = PrecisionConfig()) -> list[BigReal]:
    """q_1, q_2, q_3 of the expansion about 3/2, as typeset.

    With eta = -2 + gamma + ln 4 (which is -psi(3/2)).  q_2 repeats q_1 in
    its definition and q_3 keeps the printed pi**2 - 96 and the cube.
    """
    pi = constants(cfg)["pi"]
    eta = _eta(cfg)
    d = pi**2 - 8
    c3 = 7 * riemann_zeta(3, cfg) - 8
    q1 = 2 / d * eta
    q2 = 2 / d * eta + 8 * c3 / d**3 * eta**2
    q3 = (64 * c3**3 / d**5 - 8 * (pi**2 - 96) / (3 * d**4)) * eta**3
    return [q1, q2, q3]


def _printed_r_sums(cfg: PrecisionConfig) -> list[BigReal]:
    gamma = constants(cfg)["gamma"]
    acc = to_bigreal(1, cfg.digits)
    out = []
    for i, r in enumerate(printed_r_coefficients(cfg), 1):
        acc = acc + r * gamma**i
        out.append(acc)
    return out


def table(table_id: int, cfg: PrecisionConfig = PrecisionConfig(TABLE_DIGITS)) -> TableReport:
    """Rebuild one of the two published convergence tables."""
    if table_id == 1:
        computed = _printed_r_sums(cfg)
        values, labels, note = TABLE1_VALUES, TABLE1_LABELS, TABLE1_NOTE
    elif table_id == 2:
        computed = list(expand(Fraction(3, 2), 3, "reversion", cfg).partial_sums)
        values, labels, note = TABLE2_VALUES, TABLE2_LABELS, TABLE2_NOTE
    else:
        raise ValueError(f"table_id must be 1 or 2, got {table_id!r}")
    rows = []
    for label, value, paper in zip(labels, computed, values):
        paper = to_bigreal(paper, cfg.digits)
        rows.append(TableRow(label, value, paper, value - paper))
    return TableReport(table_id, tuple(rows), note)


def discrepancy_report(cfg: PrecisionConfig = PrecisionConfig(TABLE_DIGITS)) -> dict:
    """Every pairwise comparison between engines, printed formulas and tables.

    Returns ``{"psi_root", "records", "notes"}`` where ``records`` is a list
    of :class:`AuditRecord`.
    """
    root = psi_root(cfg)
    records = []

    # anchor 1: expansion in powers of gamma
    rev1 = expand(1, 6, "reversion", cfg)
    gamma = constants(cfg)["gamma"]
    r = printed_r_coefficients(cfg)
    r_sums = _printed_r_sums(cfg)
    for n in range(1, 7):
        paper = to_bigreal(TABLE1_VALUES[n - 1], cfg.digits)
        records += [
            AuditRecord("1", n, "printed_r_partial_sum", r_sums[n - 1], "table1", paper),
            AuditRecord("1", n, "reversion_partial_sum", rev1.partial_sums[n - 1], "table1", paper),
            AuditRecord("1", n, "printed_r_term", r[n - 1] * gamma**n, "reversion_term", rev1.terms[n - 1]),
            AuditRecord("1", n, "reversion_partial_sum", rev1.partial_sums[n - 1], "psi_root", root),
            AuditRecord("1", n, "table1", paper, "psi_root", root),
        ]

    # anchor 3/2
    rev32 = expand(Fraction(3, 2), 3, "reversion", cfg)
    q = printed_q_terms(cfg)
    acc = to_bigreal(Fraction(3, 2), cfg.digits)
    for n in range(1, 4):
        paper = to_bigreal(TABLE2_VALUES[n - 1], cfg.digits)
        acc = acc + q[n - 1]
        records += [
            AuditRecord("3/2", n, "reversion_partial_sum", rev32.partial_sums[n - 1], "table2", paper),
            AuditRecord("3/2", n, "printed_q_cumulative", acc, "table2", paper),
            AuditRecord("3/2", n, "printed_q", q[n - 1], "reversion_term", rev32.terms[n - 1]),
            AuditRecord("3/2", n, "reversion_partial_sum", rev32.partial_sums[n - 1], "psi_root", root),
            AuditRecord("3/2", n, "table2", paper, "psi_root", root),
        ]

    reference = to_bigreal(REFERENCE_ROOT, cfg.digits)
    records.append(AuditRecord("-", 0, "psi_root", root, "caption_root", reference))
    return {"psi_root": root, "records": records, "notes": list(AUDIT_NOTES)}
