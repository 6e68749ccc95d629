#include "levymc/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace levymc {

namespace {

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

// Keep the stream namespaces of the different experiment kinds disjoint;
// region offsets exceed the (level, path) id span used inside one run.
constexpr std::uint64_t rates_stream_region = std::uint64_t{2} << 56;
constexpr std::uint64_t dn_stream_region = std::uint64_t{13} << 56;
constexpr std::uint64_t sweep_stream_region = std::uint64_t{1} << 58;

} // namespace

RateReference rate_reference(ModelKind model, OptionKind option) {
    switch (model) {
    case ModelKind::vg:
        switch (option) {
        case OptionKind::asian_call: return {1.0, 2.0};
        case OptionKind::lookback_put: return {1.0, 1.5};
        case OptionKind::up_out_barrier_call: return {0.7, 1.0};
        }
        break;
    case ModelKind::nig:
        switch (option) {
        case OptionKind::asian_call: return {1.0, 2.0};
        case OptionKind::lookback_put: return {0.7, 1.5};
        case OptionKind::up_out_barrier_call: return {0.7, 0.9};
        }
        break;
    case ModelKind::stable:
        switch (option) {
        case OptionKind::asian_call: return {1.0, 2.0};
        case OptionKind::lookback_put: return {0.5, 1.5};
        case OptionKind::up_out_barrier_call: return {0.5, 0.7};
        }
        break;
    }
    throw std::logic_error("rate_reference: unknown cell");
}

RateReport measure_rates(const LevyModel& model, const OptionSpec& spec,
                         int levels, std::uint64_t samples_per_level,
                         const MlmcConfig& cfg, int fit_floor, double tolerance) {
    if (levels < 4)
        throw std::invalid_argument("measure_rates: need at least 4 levels");
    if (samples_per_level < 10000)
        throw std::invalid_argument("measure_rates: need >= 10^4 samples/level");

    MlmcConfig local = cfg;
    local.stream_offset += rates_stream_region;

    RateReport report;
    report.model = model.kind();
    report.option = spec.kind;
    report.refinement = cfg.refinement;
    report.fit_floor = fit_floor;
    report.tolerance = tolerance;
    report.reference = rate_reference(model.kind(), spec.kind);
    for (int l = 0; l <= levels; ++l)
        report.levels.push_back(
            sample_level(model, spec, l, samples_per_level, local));

    std::tie(report.alpha_hat, report.beta_hat) =
        fit_rates(report.levels, cfg.refinement, fit_floor);
    report.alpha_pass =
        std::abs(report.alpha_hat - report.reference.weak) <= tolerance;
    report.beta_pass =
        std::abs(report.beta_hat - report.reference.var) <= tolerance;
    return report;
}

DnReport measure_dn(const LevyModel& model, std::span<const std::int64_t> n_list,
                    std::uint64_t n_paths, int ref_multiplier,
                    const MlmcConfig& cfg) {
    if (ref_multiplier < 16)
        throw std::invalid_argument("measure_dn: ref_multiplier must be >= 16");
    if (n_list.empty())
        throw std::invalid_argument("measure_dn: empty n list");

    DnReport report;
    report.model = model.kind();
    report.ref_multiplier = ref_multiplier;

    for (std::size_t idx = 0; idx < n_list.size(); ++idx) {
        const std::int64_t n = n_list[idx];
        if (n < 1)
            throw std::invalid_argument("measure_dn: n must be >= 1");
        const std::int64_t n_fine = n * ref_multiplier;
        const double h = 1.0 / static_cast<double>(n_fine);
        const IncrementSampler increment(model, h);

#ifdef _OPENMP
        const int n_threads = omp_get_max_threads();
#else
        const int n_threads = 1;
#endif
        struct Accum {
            double sum_d = 0.0, sum_d2 = 0.0, sum_d4 = 0.0, max_d = 0.0;
        };
        std::vector<Accum> partial(static_cast<std::size_t>(n_threads));

#ifdef _OPENMP
#pragma omp parallel num_threads(n_threads)
#endif
        {
#ifdef _OPENMP
            Accum& acc = partial[static_cast<std::size_t>(omp_get_thread_num())];
#else
            Accum& acc = partial[0];
#endif
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
            for (std::int64_t i = 0; i < static_cast<std::int64_t>(n_paths); ++i) {
                RngStream s(cfg.seed, cfg.stream_offset + dn_stream_region +
                                          (static_cast<std::uint64_t>(idx) << 44) +
                                          static_cast<std::uint64_t>(i));
                double x = 0.0;
                double max_fine = 0.0;   // proxy-continuous supremum
                double max_coarse = 0.0; // discretely monitored maximum
                for (std::int64_t j = 1; j <= n_fine; ++j) {
                    x += increment(s);
                    max_fine = std::max(max_fine, x);
                    if (j % ref_multiplier == 0)
                        max_coarse = std::max(max_coarse, x);
                }
                const double d = max_fine - max_coarse;
                acc.sum_d += d;
                acc.sum_d2 += d * d;
                acc.sum_d4 += (d * d) * (d * d);
                acc.max_d = std::max(acc.max_d, d);
            }
        }

        Accum total;
        for (const auto& p : partial) {
            total.sum_d += p.sum_d;
            total.sum_d2 += p.sum_d2;
            total.sum_d4 += p.sum_d4;
            total.max_d = std::max(total.max_d, p.max_d);
        }

        const auto nn = static_cast<double>(n_paths);
        DnRow row;
        row.n = n;
        row.paths = n_paths;
        row.mean_dn = total.sum_d / nn;
        row.mean_dn2 = total.sum_d2 / nn;
        row.se_mean_dn = std::sqrt(
            std::max(0.0, total.sum_d2 / nn - row.mean_dn * row.mean_dn) / nn);
        row.se_mean_dn2 = std::sqrt(
            std::max(0.0, total.sum_d4 / nn - row.mean_dn2 * row.mean_dn2) / nn);
        row.max_dn = total.max_d;
        report.rows.push_back(row);
    }

    std::vector<double> xs, y1, y2;
    for (const auto& row : report.rows) {
        if (row.mean_dn <= 0.0 || row.mean_dn2 <= 0.0)
            continue;
        xs.push_back(std::log(static_cast<double>(row.n)));
        y1.push_back(std::log(row.mean_dn));
        y2.push_back(std::log(row.mean_dn2));
    }
    if (xs.size() >= 2) {
        report.exponent_mean = -ols_slope(xs, y1);
        report.exponent_mean2 = -ols_slope(xs, y2);
    }
    return report;
}

std::vector<ComplexityPoint> complexity_sweep(const LevyModel& model,
                                              const OptionSpec& spec,
                                              std::span<const double> eps_list,
                                              const MlmcConfig& cfg) {
    if (eps_list.size() < 3)
        throw std::invalid_argument("complexity_sweep: need >= 3 eps points");
    for (std::size_t i = 1; i < eps_list.size(); ++i)
        if (!(eps_list[i] < eps_list[i - 1]))
            throw std::invalid_argument(
                "complexity_sweep: eps list must be strictly decreasing");

    std::vector<ComplexityPoint> points;
    for (std::size_t i = 0; i < eps_list.size(); ++i) {
        MlmcConfig local = cfg;
        local.stream_offset +=
            sweep_stream_region * static_cast<std::uint64_t>(i + 1);
        const MlmcResult res = run_mlmc(model, spec, eps_list[i], local);

        ComplexityPoint pt;
        pt.eps = eps_list[i];
        pt.converged = res.converged;
        pt.estimate = res.estimate;
        pt.bias_level = res.levels.back().level;
        pt.mlmc_cost = static_cast<double>(res.total_cost);
        const double var_fine = res.levels.back().variance_p();
        pt.std_mc_cost = 2.0 / (pt.eps * pt.eps) * var_fine *
                         std::pow(static_cast<double>(cfg.refinement),
                                  pt.bias_level);
        points.push_back(pt);
    }
    return points;
}

double cost_slope(std::span<const ComplexityPoint> points) {
    if (points.size() < 2)
        throw std::invalid_argument("cost_slope: need >= 2 points");
    std::vector<double> xs, ys;
    for (const auto& p : points) {
        xs.push_back(std::log(p.eps));
        ys.push_back(std::log(p.mlmc_cost));
    }
    return ols_slope(xs, ys);
}

} // namespace levymc
