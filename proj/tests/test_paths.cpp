#include <doctest.h>

#include <algorithm>
#include <vector>

#include "levymc/paths.hpp"
#include "support/stats.hpp"

using namespace levymc;
using namespace testsupport;

namespace {

const LevyModel vg_model{VgParams{0.1213, -0.1436, 0.1686, 0.05}};
const LevyModel stable_model{StableParams{1.5597, 0.0, 0.1486, 0.05}};

} // namespace

TEST_SUITE("paths") {

TEST_CASE("grid spec validates and sizes the hierarchy") {
    GridSpec g(2, 4, 1.0);
    CHECK(g.n_fine() == 16);
    CHECK(g.n_coarse() == 4);
    CHECK(g.h_fine() == doctest::Approx(1.0 / 16.0));
    CHECK_THROWS_AS(GridSpec(-1, 4, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(GridSpec(2, 1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(GridSpec(2, 4, 0.0), std::invalid_argument);
}

TEST_CASE("level 0 has a two-entry fine path and no coarse path") {
    RngStream s(31, 0);
    const PathGrid path = generate_coupled_path(vg_model, GridSpec(0), s);
    REQUIRE(path.fine_x.size() == 2);
    CHECK(path.fine_x[0] == 0.0);
    CHECK(path.coarse_x.empty());
}

TEST_CASE("level 2 coupling is an exact subsampling") {
    RngStream s(32, 0);
    const PathGrid path = generate_coupled_path(vg_model, GridSpec(2), s);
    REQUIRE(path.fine_x.size() == 17);
    REQUIRE(path.coarse_x.size() == 5);
    CHECK(path.coarse_x[3] == path.fine_x[12]);
    for (std::size_t k = 0; k < path.coarse_x.size(); ++k)
        CHECK(path.coarse_x[k] == path.fine_x[4 * k]); // bitwise
}

TEST_CASE("discrete max can only grow under refinement") {
    for (const auto* model : {&vg_model, &stable_model}) {
        for (int level : {1, 2, 3}) {
            for (int rep = 0; rep < 200; ++rep) {
                RngStream s(33, static_cast<std::uint64_t>(level * 1000 + rep));
                const PathGrid p = generate_coupled_path(*model, GridSpec(level), s);
                const double fine_max =
                    *std::max_element(p.fine_x.begin(), p.fine_x.end());
                const double coarse_max =
                    *std::max_element(p.coarse_x.begin(), p.coarse_x.end());
                CHECK(fine_max >= coarse_max);
            }
        }
    }
}

TEST_CASE("terminal value has the same law on every level") {
    for (const auto* model : {&vg_model, &stable_model}) {
        const int n_paths = 100000;
        std::vector<double> lvl0(n_paths), lvl3(n_paths);
        PathGrid buf;
        RngStream s0(34, 1);
        for (auto& v : lvl0) {
            generate_coupled_path(*model, GridSpec(0), s0, buf);
            v = buf.fine_x.back();
        }
        RngStream s3(34, 2);
        for (auto& v : lvl3) {
            generate_coupled_path(*model, GridSpec(3), s3, buf);
            v = buf.fine_x.back();
        }
        CHECK(two_sample_ks(lvl0, lvl3) <
              two_sample_ks_critical_1pct(n_paths, n_paths));
    }
}

} // TEST_SUITE
