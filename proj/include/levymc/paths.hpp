#pragma once

#include <cstdint>
#include <vector>

#include "levymc/models.hpp"
#include "levymc/rng.hpp"

namespace levymc {

/// Uniform grid hierarchy: level l has M^l timesteps of size T/M^l.
struct GridSpec {
    int level;
    int refinement; // M
    double maturity; // T, years

    explicit GridSpec(int level_, int refinement_ = 4, double maturity_ = 1.0);

    std::int64_t n_fine() const { return n_fine_; }
    std::int64_t n_coarse() const { return n_fine_ / refinement; }
    double h_fine() const { return maturity / static_cast<double>(n_fine_); }

  private:
    std::int64_t n_fine_;
};

/// One coupled realization of the log-price on a level's fine grid together
/// with its coarse subsampling. coarse_x is empty at level 0.
struct PathGrid {
    std::vector<double> fine_x;   // n_fine + 1 values, fine_x[0] = 0
    std::vector<double> coarse_x; // n_fine/M + 1 values, coarse_x[k] = fine_x[kM]
};

/// Generates the fine path as a cumulative sum of exact increments and the
/// coarse path by subsampling the same realization, so the two resolutions
/// share the underlying Levy path bitwise.
PathGrid generate_coupled_path(const LevyModel& model, const GridSpec& grid,
                               RngStream& s);

/// Buffer-reusing variant for hot loops.
void generate_coupled_path(const LevyModel& model, const GridSpec& grid,
                           RngStream& s, PathGrid& out);

} // namespace levymc
