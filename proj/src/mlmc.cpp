#include "levymc/mlmc.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <numbers>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "levymc/paths.hpp"

namespace levymc {

namespace {

// Substream layout: bits [40,63) select the level, low 40 bits the path
// index. Construction mixes the id, so the structure never leaks into the
// output stream.
std::uint64_t path_stream_id(const MlmcConfig& cfg, int level,
                             std::uint64_t path_index) {
    return cfg.stream_offset +
           (static_cast<std::uint64_t>(level + 1) << 40) + path_index;
}

double ols_slope(std::span<const double> xs, std::span<const double> ys) {
    const auto n = static_cast<double>(xs.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    return sxy / sxx;
}

// Decay-exponent estimate usable with as few as two points; run_mlmc's bias
// test needs this before fit_rates' three-level minimum is met.
double loose_alpha(std::span<const LevelStats> levels, int M) {
    std::vector<double> xs, ys;
    for (const auto& st : levels) {
        if (st.level >= 1 && st.mean() != 0.0) {
            xs.push_back(static_cast<double>(st.level));
            ys.push_back(std::log(std::abs(st.mean())) / std::log(double(M)));
        }
    }
    if (xs.size() < 2)
        return 1.0;
    return -ols_slope(xs, ys);
}

double remaining_bias(std::span<const LevelStats> levels, double alpha, int M) {
    // Extrapolate each of the last two level means forward to the terminal
    // level, then to the un-simulated remainder of the telescope.
    const double m_alpha = std::pow(static_cast<double>(M), alpha);
    const std::size_t top = levels.size() - 1;
    double rem = std::abs(levels[top].mean());
    if (top >= 2)
        rem = std::max(rem, std::abs(levels[top - 1].mean()) / m_alpha);
    return rem / (m_alpha - 1.0);
}

} // namespace

void LevelStats::add(double y, double p, std::uint64_t path_cost) {
    const double y2 = y * y;
    n += 1;
    sum_y += y;
    sum_y2 += y2;
    sum_y3 += y2 * y;
    sum_y4 += y2 * y2;
    sum_p += p;
    sum_p2 += p * p;
    cost += path_cost;
}

void LevelStats::merge(const LevelStats& other) {
    n += other.n;
    sum_y += other.sum_y;
    sum_y2 += other.sum_y2;
    sum_y3 += other.sum_y3;
    sum_y4 += other.sum_y4;
    sum_p += other.sum_p;
    sum_p2 += other.sum_p2;
    cost += other.cost;
}

double LevelStats::mean() const {
    return n ? sum_y / static_cast<double>(n) : 0.0;
}

double LevelStats::variance() const {
    if (n < 2)
        return 0.0;
    const double m = mean();
    return std::max(0.0, sum_y2 / static_cast<double>(n) - m * m);
}

double LevelStats::kurtosis() const {
    const double v = variance();
    if (n < 2 || v == 0.0)
        return std::numeric_limits<double>::quiet_NaN();
    const double nn = static_cast<double>(n);
    const double m = mean();
    const double m4 = sum_y4 / nn - 4.0 * m * sum_y3 / nn +
                      6.0 * m * m * sum_y2 / nn - 3.0 * m * m * m * m;
    return m4 / (v * v);
}

double LevelStats::mean_p() const {
    return n ? sum_p / static_cast<double>(n) : 0.0;
}

double LevelStats::variance_p() const {
    if (n < 2)
        return 0.0;
    const double m = mean_p();
    return std::max(0.0, sum_p2 / static_cast<double>(n) - m * m);
}

std::vector<std::uint64_t> optimal_allocation(std::span<const double> variances,
                                              std::span<const double> costs,
                                              double eps, std::uint64_t n_min) {
    if (!(eps > 0.0))
        throw std::invalid_argument("optimal_allocation: eps must be > 0");
    if (variances.size() != costs.size())
        throw std::invalid_argument("optimal_allocation: size mismatch");
    double lagrange = 0.0;
    for (std::size_t l = 0; l < variances.size(); ++l) {
        if (variances[l] < 0.0 || !(costs[l] > 0.0))
            throw std::invalid_argument(
                "optimal_allocation: need V >= 0 and C > 0");
        lagrange += std::sqrt(variances[l] * costs[l]);
    }
    std::vector<std::uint64_t> out(variances.size());
    for (std::size_t l = 0; l < variances.size(); ++l) {
        const double ideal =
            2.0 / (eps * eps) * std::sqrt(variances[l] / costs[l]) * lagrange;
        out[l] = std::max<std::uint64_t>(
            n_min, static_cast<std::uint64_t>(std::ceil(ideal)));
    }
    return out;
}

std::pair<double, double> fit_rates(std::span<const LevelStats> levels, int M,
                                    int fit_floor) {
    const int floor_level = std::max(1, fit_floor);
    std::vector<double> xs, y_mean, y_var;
    const double log_m = std::log(static_cast<double>(M));
    for (const auto& st : levels) {
        if (st.level < floor_level)
            continue;
        if (st.mean() == 0.0 || st.variance() == 0.0)
            continue;
        xs.push_back(static_cast<double>(st.level));
        y_mean.push_back(std::log(std::abs(st.mean())) / log_m);
        y_var.push_back(std::log(st.variance()) / log_m);
    }
    if (xs.size() < 3)
        throw std::invalid_argument(
            "fit_rates: need at least 3 correction levels in the fit window");
    return {-ols_slope(xs, y_mean), -ols_slope(xs, y_var)};
}

void accumulate_level(const LevyModel& model, const OptionSpec& spec, int level,
                      std::uint64_t first, std::uint64_t count,
                      const MlmcConfig& cfg, LevelStats& stats) {
    if (stats.level != level)
        throw std::invalid_argument("accumulate_level: stats/level mismatch");
    const GridSpec grid(level, cfg.refinement, spec.maturity);
    const auto path_cost = static_cast<std::uint64_t>(grid.n_fine());

#ifdef _OPENMP
    const int n_threads = omp_get_max_threads();
#else
    const int n_threads = 1;
#endif
    std::vector<LevelStats> partial(static_cast<std::size_t>(n_threads),
                                    LevelStats{level});

#ifdef _OPENMP
#pragma omp parallel num_threads(n_threads)
#endif
    {
#ifdef _OPENMP
        LevelStats& acc = partial[static_cast<std::size_t>(omp_get_thread_num())];
#else
        LevelStats& acc = partial[0];
#endif
        PathGrid buf;
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
            RngStream s(cfg.seed, path_stream_id(cfg, level,
                                                 first + static_cast<std::uint64_t>(i)));
            generate_coupled_path(model, grid, s, buf);
            const PayoffPair pp = evaluate_pair(buf, spec);
            const double y = pp.coarse ? pp.fine - *pp.coarse : pp.fine;
            acc.add(y, pp.fine, path_cost);
        }
    }

    // Merge in thread order: totals are reproducible for a fixed partition.
    for (const auto& p : partial)
        stats.merge(p);
}

LevelStats sample_level(const LevyModel& model, const OptionSpec& spec,
                        int level, std::uint64_t count, const MlmcConfig& cfg) {
    LevelStats stats{level};
    accumulate_level(model, spec, level, 0, count, cfg, stats);
    return stats;
}

MlmcResult run_mlmc(const LevyModel& model, const OptionSpec& spec, double eps,
                    const MlmcConfig& cfg) {
    if (!(eps > 0.0))
        throw std::invalid_argument("run_mlmc: eps must be > 0");
    if (cfg.level_min < 1 || cfg.level_max < cfg.level_min)
        throw std::invalid_argument("run_mlmc: need 1 <= level_min <= level_max");

    int top = cfg.level_min;
    std::vector<LevelStats> levels;
    std::vector<std::uint64_t> target;
    for (int l = 0; l <= top; ++l) {
        levels.push_back(LevelStats{l});
        target.push_back(cfg.n_init);
    }

    bool converged = false;
    for (;;) {
        for (int l = 0; l <= top; ++l) {
            const auto idx = static_cast<std::size_t>(l);
            if (target[idx] > levels[idx].n)
                accumulate_level(model, spec, l, levels[idx].n,
                                 target[idx] - levels[idx].n, cfg, levels[idx]);
        }

        std::vector<double> variances, costs;
        for (int l = 0; l <= top; ++l) {
            variances.push_back(levels[static_cast<std::size_t>(l)].variance());
            costs.push_back(std::pow(static_cast<double>(cfg.refinement), l));
        }
        const auto optimal = optimal_allocation(variances, costs, eps, cfg.n_min);

        bool needs_more = false;
        for (int l = 0; l <= top; ++l) {
            const auto idx = static_cast<std::size_t>(l);
            target[idx] = std::max(target[idx], optimal[idx]);
            // Strict: on exit the current variance estimates must satisfy
            // sum V_l/N_l <= eps^2/2. Late rounds top up by fractions of a
            // percent, so the extra work is marginal.
            if (optimal[idx] > levels[idx].n)
                needs_more = true;
        }
        if (needs_more)
            continue;

        const double alpha =
            std::max(cfg.alpha_floor, loose_alpha(levels, cfg.refinement));
        if (remaining_bias(levels, alpha, cfg.refinement) <=
            eps / std::numbers::sqrt2) {
            converged = true;
            break;
        }
        if (top == cfg.level_max)
            break;
        ++top;
        levels.push_back(LevelStats{top});
        target.push_back(cfg.n_init);
    }

    MlmcResult result;
    result.eps = eps;
    result.converged = converged;
    result.levels = std::move(levels);
    for (const auto& st : result.levels) {
        result.estimate += st.mean();
        result.total_cost += st.cost;
    }
    try {
        std::tie(result.alpha_hat, result.beta_hat) =
            fit_rates(result.levels, cfg.refinement, 1);
    } catch (const std::invalid_argument&) {
        result.alpha_hat = loose_alpha(result.levels, cfg.refinement);
        result.beta_hat = std::numeric_limits<double>::quiet_NaN();
    }

    const double top_kurtosis = result.levels.back().kurtosis();
    if (top_kurtosis > 100.0)
        std::cerr << "run_mlmc: kurtosis " << top_kurtosis
                  << " on the finest level; variance estimates may be poor\n";

    return result;
}

} // namespace levymc
