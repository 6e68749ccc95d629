#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "levymc/mlmc.hpp"
#include "support/stats.hpp"

using namespace levymc;

namespace {

const LevyModel vg_model{VgParams{0.1213, -0.1436, 0.1686, 0.05}};

LevelStats synthetic_level(int level, double mean, double var) {
    // Two-point construction realizing an exact mean and variance.
    LevelStats st{level};
    st.add(mean + std::sqrt(var), 0.0, 1);
    st.add(mean - std::sqrt(var), 0.0, 1);
    return st;
}

} // namespace

TEST_SUITE("mlmc") {

TEST_CASE("level stats merge like a single pass") {
    LevelStats bulk{1}, a{1}, b{1};
    const double ys[] = {0.5, -1.5, 2.0, 0.25, -0.125};
    for (int i = 0; i < 5; ++i) {
        bulk.add(ys[i], ys[i] + 1.0, 4);
        (i < 3 ? a : b).add(ys[i], ys[i] + 1.0, 4);
    }
    a.merge(b);
    CHECK(a.n == bulk.n);
    CHECK(a.sum_y == bulk.sum_y);
    CHECK(a.sum_y4 == bulk.sum_y4);
    CHECK(a.cost == bulk.cost);
    CHECK(bulk.cost == 20);
}

TEST_CASE("optimal allocation formula") {
    SUBCASE("single level") {
        const double v[] = {1.0};
        const double c[] = {1.0};
        const auto n = optimal_allocation(v, c, 0.1);
        REQUIRE(n.size() == 1);
        CHECK(n[0] == 200); // ceil(2 * 100 * 1 * 1)
    }
    SUBCASE("two levels keep the sqrt(V/C) proportions") {
        const double v[] = {1.0, 0.25};
        const double c[] = {1.0, 4.0};
        const auto n = optimal_allocation(v, c, 0.1);
        CHECK(n[0] == 400); // 2*100*1*(1+1)
        CHECK(n[1] == 100); // 4:1 ratio
    }
    SUBCASE("zero-variance level gets the floor") {
        const double v[] = {1.0, 0.0};
        const double c[] = {1.0, 4.0};
        const auto n = optimal_allocation(v, c, 0.1);
        CHECK(n[1] == 100);
    }
    SUBCASE("achieved variance stays within the eps^2/2 budget") {
        std::mt19937 gen(99);
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        for (int rep = 0; rep < 50; ++rep) {
            std::vector<double> v(5), c(5);
            for (int l = 0; l < 5; ++l) {
                v[l] = unif(gen) * std::pow(4.0, -l);
                c[l] = std::pow(4.0, l);
            }
            const double eps = 0.01 + 0.1 * unif(gen);
            const auto n = optimal_allocation(v, c, eps);
            double achieved = 0.0;
            for (int l = 0; l < 5; ++l)
                achieved += v[l] / static_cast<double>(n[l]);
            CHECK(achieved <= eps * eps / 2.0 * (1.0 + 1e-12));
        }
    }
    SUBCASE("parameter errors") {
        const double v[] = {1.0};
        const double c[] = {1.0};
        CHECK_THROWS_AS((void)optimal_allocation(v, c, 0.0), std::invalid_argument);
        const double vneg[] = {-1.0};
        CHECK_THROWS_AS((void)optimal_allocation(vneg, c, 0.1),
                        std::invalid_argument);
    }
}

TEST_CASE("rate fitting on synthetic exact decays") {
    SUBCASE("unit slopes") {
        std::vector<LevelStats> levels;
        for (int l = 1; l <= 5; ++l)
            levels.push_back(
                synthetic_level(l, std::pow(4.0, -l), std::pow(4.0, -2 * l)));
        const auto [alpha, beta] = fit_rates(levels, 4);
        CHECK(alpha == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(beta == doctest::Approx(2.0).epsilon(1e-12));
    }
    SUBCASE("fractional weak rate") {
        std::vector<LevelStats> levels;
        for (int l = 1; l <= 6; ++l)
            levels.push_back(synthetic_level(l, 3.0 * std::pow(4.0, -0.7 * l),
                                             std::pow(4.0, -l)));
        const auto [alpha, beta] = fit_rates(levels, 4);
        CHECK(alpha == doctest::Approx(0.7).epsilon(1e-12));
        CHECK(beta == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("fit floor drops early levels") {
        std::vector<LevelStats> levels;
        levels.push_back(synthetic_level(1, 100.0, 100.0)); // off-trend
        for (int l = 2; l <= 5; ++l)
            levels.push_back(
                synthetic_level(l, std::pow(4.0, -l), std::pow(4.0, -l)));
        const auto [alpha, beta] = fit_rates(levels, 4, 2);
        CHECK(alpha == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(beta == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("insufficient correction levels") {
        std::vector<LevelStats> levels{synthetic_level(0, 1.0, 1.0),
                                       synthetic_level(1, 0.25, 0.25),
                                       synthetic_level(2, 0.0625, 0.0625)};
        CHECK_THROWS_AS((void)fit_rates(levels, 4, 2), std::invalid_argument);
    }
}

TEST_CASE("degenerate zero payoff stops at the minimum level") {
    const auto dead = OptionSpec::lookback_put(100.0, 0.0, 1.0, 0.05);
    MlmcConfig cfg;
    cfg.n_init = 500;
    const MlmcResult res = run_mlmc(vg_model, dead, 0.01, cfg);
    CHECK(res.estimate == 0.0);
    CHECK(res.converged);
    CHECK(res.levels.size() == static_cast<std::size_t>(cfg.level_min) + 1);
    for (const auto& st : res.levels) {
        CHECK(st.mean() == 0.0);
        CHECK(st.variance() == 0.0);
    }
}

TEST_CASE("driver invariants on a converged run") {
    const auto lb = OptionSpec::lookback_put(100.0, 110.0, 1.0, 0.05);
    MlmcConfig cfg;
    cfg.n_init = 2000;
    const double eps = 0.05;
    const MlmcResult res = run_mlmc(vg_model, lb, eps, cfg);
    REQUIRE(res.converged);
    REQUIRE(!res.levels.empty());
    CHECK(res.levels.front().level == 0);

    double estimate = 0.0;
    double achieved = 0.0;
    std::uint64_t cost = 0;
    for (std::size_t l = 0; l < res.levels.size(); ++l) {
        const auto& st = res.levels[l];
        CHECK(st.level == static_cast<int>(l)); // contiguous
        CHECK(st.variance() >= 0.0);
        estimate += st.mean();
        achieved += st.variance() / static_cast<double>(st.n);
        CHECK(st.cost ==
              st.n * static_cast<std::uint64_t>(std::llround(std::pow(4.0, st.level))));
        cost += st.cost;
    }
    CHECK(res.estimate == doctest::Approx(estimate).epsilon(1e-15));
    CHECK(res.total_cost == cost);
    CHECK(achieved <= eps * eps / 2.0 * (1.0 + 1e-12));
    CHECK(res.estimate > 0.0);
}

TEST_CASE("driver is deterministic for a fixed seed and partition") {
    const auto lb = OptionSpec::lookback_put(100.0, 110.0, 1.0, 0.05);
    MlmcConfig cfg;
    cfg.n_init = 1000;
    cfg.seed = 17;
    const MlmcResult a = run_mlmc(vg_model, lb, 0.05, cfg);
    const MlmcResult b = run_mlmc(vg_model, lb, 0.05, cfg);
    CHECK(a.estimate == b.estimate);
    REQUIRE(a.levels.size() == b.levels.size());
    for (std::size_t l = 0; l < a.levels.size(); ++l) {
        CHECK(a.levels[l].n == b.levels[l].n);
        CHECK(a.levels[l].sum_y == b.levels[l].sum_y);
    }
}

TEST_CASE("level cap flags non-convergence without failing") {
    const auto lb = OptionSpec::lookback_put(100.0, 110.0, 1.0, 0.05);
    MlmcConfig cfg;
    cfg.n_init = 1000;
    cfg.level_min = 2;
    cfg.level_max = 2;
    const MlmcResult res = run_mlmc(vg_model, lb, 0.02, cfg);
    CHECK(!res.converged);
    CHECK(res.levels.back().level == 2);
    CHECK(res.estimate > 0.0);
}

TEST_CASE("telescoping sum matches a direct fine-level estimate") {
    const auto lb = OptionSpec::lookback_put(100.0, 110.0, 1.0, 0.05);
    MlmcConfig cfg;
    const int top = 3;
    const std::uint64_t n = 20000;

    double mlmc_sum = 0.0, mlmc_var = 0.0;
    for (int l = 0; l <= top; ++l) {
        const LevelStats st = sample_level(vg_model, lb, l, n, cfg);
        mlmc_sum += st.mean();
        mlmc_var += st.variance() / static_cast<double>(st.n);
    }

    MlmcConfig direct_cfg = cfg;
    direct_cfg.stream_offset = std::uint64_t{1} << 52;
    const LevelStats direct = sample_level(vg_model, lb, top, n, direct_cfg);
    const double combined_se =
        std::sqrt(mlmc_var + direct.variance_p() / static_cast<double>(n));
    CHECK(std::abs(mlmc_sum - direct.mean_p()) <= 4 * combined_se);
}

TEST_CASE("run_mlmc validates its inputs") {
    const auto lb = OptionSpec::lookback_put(100.0, 110.0, 1.0, 0.05);
    CHECK_THROWS_AS((void)run_mlmc(vg_model, lb, 0.0), std::invalid_argument);
    MlmcConfig bad;
    bad.level_min = 3;
    bad.level_max = 2;
    CHECK_THROWS_AS((void)run_mlmc(vg_model, lb, 0.1, bad), std::invalid_argument);
}

} // TEST_SUITE
