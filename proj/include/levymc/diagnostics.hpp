#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "levymc/mlmc.hpp"

namespace levymc {

/// Reference convergence-rate exponents (weak rate alpha, variance rate
/// beta, both in log_M scale) for each of the nine (model, option) cells.
struct RateReference {
    double weak;
    double var;
};

RateReference rate_reference(ModelKind model, OptionKind option);

/// Fixed-N per-level decay measurement with an OLS rate fit and a
/// comparison against the stored reference exponents.
struct RateReport {
    ModelKind model;
    OptionKind option;
    int refinement = 4;
    int fit_floor = 2;
    double tolerance = 0.3;
    std::vector<LevelStats> levels; // levels 0..L
    double alpha_hat = 0.0;
    double beta_hat = 0.0;
    RateReference reference{};
    bool alpha_pass = false;
    bool beta_pass = false;
};

RateReport measure_rates(const LevyModel& model, const OptionSpec& spec, int levels,
                         std::uint64_t samples_per_level, const MlmcConfig& cfg,
                         int fit_floor = 2, double tolerance = 0.3);

/// Gap between the proxy-continuous and discretely monitored suprema of X
/// over [0,1]: the proxy supremum is the max over an n*ref_multiplier grid
/// coupled to the n-grid by subsampling. The proxy underestimates the true
/// supremum, so the fitted exponents are indicative.
struct DnRow {
    std::int64_t n = 0;
    std::uint64_t paths = 0;
    double mean_dn = 0.0;
    double se_mean_dn = 0.0;
    double mean_dn2 = 0.0;
    double se_mean_dn2 = 0.0;
    double max_dn = 0.0;
};

struct DnReport {
    ModelKind model;
    int ref_multiplier = 64;
    std::vector<DnRow> rows;
    double exponent_mean = 0.0;  // -slope of log E[D_n] vs log n
    double exponent_mean2 = 0.0; // -slope of log E[D_n^2] vs log n
};

DnReport measure_dn(const LevyModel& model, std::span<const std::int64_t> n_list,
                    std::uint64_t n_paths, int ref_multiplier,
                    const MlmcConfig& cfg);

/// One point of the MLMC-vs-standard-MC cost comparison. Costs are in fine
/// timestep units; the standard-MC cost is the classical 2 eps^-2 V[P_L]
/// estimate at the bias-matching level L chosen by the MLMC run.
struct ComplexityPoint {
    double eps = 0.0;
    double mlmc_cost = 0.0;
    double std_mc_cost = 0.0;
    int bias_level = 0;
    bool converged = false;
    double estimate = 0.0;

    double savings() const { return std_mc_cost / mlmc_cost; }
};

std::vector<ComplexityPoint> complexity_sweep(const LevyModel& model,
                                              const OptionSpec& spec,
                                              std::span<const double> eps_list,
                                              const MlmcConfig& cfg);

/// OLS slope of log(mlmc_cost) against log(eps) over a sweep.
double cost_slope(std::span<const ComplexityPoint> points);

} // namespace levymc
