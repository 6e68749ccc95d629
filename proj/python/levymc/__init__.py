"""Multilevel Monte Carlo pricing for exponential Levy models.

The heavy lifting lives in the compiled extension; this package re-exports
its surface.
"""

from ._core import (
    ComplexityPoint,
    DnReport,
    DnRow,
    GridSpec,
    LevelStats,
    LevyModel,
    MlmcConfig,
    MlmcResult,
    NigParams,
    OptionSpec,
    PathGrid,
    PayoffPair,
    RateReference,
    RateReport,
    RngStream,
    RunConfig,
    StableParams,
    VgParams,
    asian_trapezoidal,
    barrier_up_out,
    complexity_sweep,
    cost_slope,
    evaluate_pair,
    fit_rates,
    generate_coupled_path,
    load_config,
    lookback_put,
    mean_correcting_drift,
    measure_dn,
    measure_rates,
    optimal_allocation,
    parse_config,
    rate_reference,
    run_mlmc,
    sample_level,
    sample_nig_increment,
    sample_stable_increment,
    sample_vg_increment,
)

__version__ = "0.1.0"

__all__ = [
    "ComplexityPoint",
    "DnReport",
    "DnRow",
    "GridSpec",
    "LevelStats",
    "LevyModel",
    "MlmcConfig",
    "MlmcResult",
    "NigParams",
    "OptionSpec",
    "PathGrid",
    "PayoffPair",
    "RateReference",
    "RateReport",
    "RngStream",
    "RunConfig",
    "StableParams",
    "VgParams",
    "asian_trapezoidal",
    "barrier_up_out",
    "complexity_sweep",
    "cost_slope",
    "evaluate_pair",
    "fit_rates",
    "generate_coupled_path",
    "load_config",
    "lookback_put",
    "mean_correcting_drift",
    "measure_dn",
    "measure_rates",
    "optimal_allocation",
    "parse_config",
    "rate_reference",
    "run_mlmc",
    "sample_level",
    "sample_nig_increment",
    "sample_stable_increment",
    "sample_vg_increment",
]
