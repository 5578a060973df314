"""High-precision location of the minimum of the Gamma function.

The minimum sits at the positive root of the digamma function.  This package
expands that root as a Lagrange-inversion series about an anchor point, with
two independent engines (power-series reversion and Faa di Bruno sums), and
checks the published coefficient formulas and convergence tables against
them and against a direct Newton root.
"""

from .combinatorics import (
    BellPartition,
    enumerate_bell_partitions,
    enumerate_compositions,
    l_derivatives,
    multinomial,
    power_derivative,
    reciprocal_derivative,
)
from .gammamin import (
    ExpansionResult,
    TableReport,
    discrepancy_report,
    expand,
    printed_q_terms,
    printed_r_coefficients,
    psi_root,
    table,
)
from .series import PowerSeries, lagrange_invert, ps_div, ps_mul, ps_pow, slope_series
from .specfun import (
    BigReal,
    DomainError,
    PrecisionConfig,
    bernoulli_numbers,
    constants,
    digamma,
    digamma_reference,
    hurwitz_zeta,
    polygamma,
    riemann_zeta,
)

__version__ = "0.1.0"

__all__ = [
    "BellPartition",
    "BigReal",
    "DomainError",
    "ExpansionResult",
    "PowerSeries",
    "PrecisionConfig",
    "TableReport",
    "bernoulli_numbers",
    "constants",
    "digamma",
    "digamma_reference",
    "discrepancy_report",
    "enumerate_bell_partitions",
    "enumerate_compositions",
    "expand",
    "hurwitz_zeta",
    "l_derivatives",
    "lagrange_invert",
    "multinomial",
    "polygamma",
    "power_derivative",
    "printed_q_terms",
    "printed_r_coefficients",
    "ps_div",
    "ps_mul",
    "ps_pow",
    "psi_root",
    "reciprocal_derivative",
    "riemann_zeta",
    "slope_series",
    "table",
]
