#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "levymc/models.hpp"
#include "levymc/payoffs.hpp"

namespace levymc {

/// Per-level accumulators for the multilevel correction Y = P_l - P_{l-1}
/// (Y = P_0 at level 0) and for the fine payoff P_l itself. Power sums up to
/// fourth order support variance and kurtosis estimates; merging is plain
/// addition, so partial accumulators from different workers combine in any
/// grouping.
struct LevelStats {
    int level = 0;
    std::uint64_t n = 0;
    double sum_y = 0.0;
    double sum_y2 = 0.0;
    double sum_y3 = 0.0;
    double sum_y4 = 0.0;
    double sum_p = 0.0;
    double sum_p2 = 0.0;
    std::uint64_t cost = 0; // n * M^level, one unit per fine timestep

    void add(double y, double p, std::uint64_t path_cost);
    void merge(const LevelStats& other);

    double mean() const;       // mean of Y
    double variance() const;   // sample variance of Y, clamped at 0
    double kurtosis() const;   // E[(Y-mean)^4]/Var^2
    double mean_p() const;
    double variance_p() const;
};

/// Driver knobs. Defaults follow the experiment setup: refinement M=4,
/// 10^4 pilot samples per new level, levels 2..10.
struct MlmcConfig {
    int refinement = 4; // M
    std::uint64_t n_init = 10000;
    std::uint64_t n_min = 100; // floor keeping variance estimates defined
    int level_min = 2;
    int level_max = 10;
    std::uint64_t seed = 0;
    std::uint64_t stream_offset = 0;
    double alpha_floor = 0.5;
};

struct MlmcResult {
    double estimate = 0.0;
    double eps = 0.0;
    std::vector<LevelStats> levels;
    double alpha_hat = 0.0; // fitted weak-rate exponent, log_M scale
    double beta_hat = 0.0;  // fitted variance-rate exponent, log_M scale
    std::uint64_t total_cost = 0;
    bool converged = false;
};

/// Lagrange-optimal sample counts N_l = ceil(2 eps^-2 sqrt(V_l/C_l)
/// sum_k sqrt(V_k C_k)), which make the estimator variance sum V_l/N_l at
/// most eps^2/2. Zero-variance levels get the n_min floor.
std::vector<std::uint64_t> optimal_allocation(std::span<const double> variances,
                                              std::span<const double> costs,
                                              double eps,
                                              std::uint64_t n_min = 100);

/// OLS fit of the weak and variance decay exponents from correction levels
/// l >= max(1, fit_floor): alpha_hat = -slope of log_M|mean_l| vs l,
/// beta_hat = -slope of log_M(var_l) vs l. Throws if fewer than three
/// correction levels are available in the window.
std::pair<double, double> fit_rates(std::span<const LevelStats> levels, int M,
                                    int fit_floor = 1);

/// Draws `count` coupled paths at `level` (path indices [first, first+count))
/// and accumulates payoff statistics into `stats`. Each (level, path index)
/// owns a dedicated substream, so totals are independent of how paths are
/// partitioned across threads; for a fixed thread count the result is
/// bit-reproducible.
void accumulate_level(const LevyModel& model, const OptionSpec& spec, int level,
                      std::uint64_t first, std::uint64_t count,
                      const MlmcConfig& cfg, LevelStats& stats);

/// Convenience wrapper: fresh statistics from `count` paths at `level`.
LevelStats sample_level(const LevyModel& model, const OptionSpec& spec,
                        int level, std::uint64_t count, const MlmcConfig& cfg);

/// Adaptive multilevel driver: grows per-level sample counts to the optimal
/// allocation for the eps^2/2 variance budget, and adds levels until the
/// extrapolated remaining bias of the last two levels is below eps/sqrt(2).
/// Returns converged=false (with partial results) if level_max is reached
/// without passing the bias test.
MlmcResult run_mlmc(const LevyModel& model, const OptionSpec& spec, double eps,
                    const MlmcConfig& cfg = {});

} // namespace levymc
