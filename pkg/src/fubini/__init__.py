"""Exact arithmetic for probabilistic degenerate Fubini polynomials.

Everything computes over rationals; floats appear only in the Monte Carlo
cross-checks and the one numeric spot-check of the infinite-series identity.
"""

from .combinat import (
    binomial,
    factorial,
    falling_factorial_poly,
    lah,
    partial_bell,
    stirling1,
    stirling2,
    stirling2_degenerate,
)
from .distributions import (
    Bernoulli,
    Distribution,
    DistributionSpecError,
    FiniteDiscrete,
    Gamma,
    PointMass,
    Poisson,
    parse_distribution,
)
from .families import (
    classical_fubini_poly,
    degenerate_bell_poly,
    degenerate_exp_series,
    degenerate_fubini_poly,
    degenerate_fubini_poly_order,
)
from .hooks import perturb
from .identities import (
    CheckConfig,
    CheckReport,
    Counterexample,
    EXPECTED_DISCREPANCIES,
    IdentityId,
    check_identity,
    default_config,
    run_suite,
    suite_ok,
    thm2_2_numeric_spotcheck,
)
from .poly import Polynomial, gamma_weight_integral
from .probabilistic import (
    degenerate_moment,
    mgf_degenerate_series,
    prob_bell_poly,
    prob_fubini_poly,
    prob_fubini_poly_order,
    prob_stirling2,
    raw_moment,
    sum_degenerate_moment,
    sum_raw_moment,
)
from .rational import Rational, as_rational, format_rational, parse_rational
from .sampling import MCResult, draw, estimate_sum_moment
from .series import TruncatedSeries

__version__ = "0.1.0"

__all__ = [
    "Bernoulli",
    "CheckConfig",
    "CheckReport",
    "Counterexample",
    "Distribution",
    "DistributionSpecError",
    "EXPECTED_DISCREPANCIES",
    "FiniteDiscrete",
    "Gamma",
    "IdentityId",
    "MCResult",
    "PointMass",
    "Poisson",
    "Polynomial",
    "Rational",
    "TruncatedSeries",
    "as_rational",
    "binomial",
    "check_identity",
    "classical_fubini_poly",
    "default_config",
    "degenerate_bell_poly",
    "degenerate_exp_series",
    "degenerate_fubini_poly",
    "degenerate_fubini_poly_order",
    "degenerate_moment",
    "draw",
    "estimate_sum_moment",
    "factorial",
    "falling_factorial_poly",
    "format_rational",
    "gamma_weight_integral",
    "lah",
    "mgf_degenerate_series",
    "parse_distribution",
    "parse_rational",
    "partial_bell",
    "perturb",
    "prob_bell_poly",
    "prob_fubini_poly",
    "prob_fubini_poly_order",
    "prob_stirling2",
    "raw_moment",
    "run_suite",
    "stirling1",
    "stirling2",
    "stirling2_degenerate",
    "suite_ok",
    "sum_degenerate_moment",
    "sum_raw_moment",
    "thm2_2_numeric_spotcheck",
]
