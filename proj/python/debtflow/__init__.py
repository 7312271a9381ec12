"""Issuance-strategy cost/risk analytics.

Thin wrapper over the C++ core. The main operations map issuance
fractions to asymptotic cost and risk metrics, trace the efficient
frontier, solve window-constrained optimizations, and run the
finite-horizon debt-rolling simulator.
"""

from ._core import (
    DebtflowError,
    __version__,
    check_growth_dominance,
    cost_weights,
    default_assumptions,
    dominant_directions,
    equilibrium_distribution,
    equilibrium_wam,
    fiscal_year_fractions,
    frontier_point,
    metrics,
    optimize_constrained,
    rollover_tau,
    simulate,
    spot_fractions,
    sweet_spot_tenor,
    validate_strategy,
    verify_convexity_condition,
)

__all__ = [
    "DebtflowError",
    "__version__",
    "check_growth_dominance",
    "cost_weights",
    "default_assumptions",
    "dominant_directions",
    "equilibrium_distribution",
    "equilibrium_wam",
    "fiscal_year_fractions",
    "frontier_point",
    "metrics",
    "optimize_constrained",
    "rollover_tau",
    "simulate",
    "spot_fractions",
    "sweet_spot_tenor",
    "validate_strategy",
    "verify_convexity_condition",
]
