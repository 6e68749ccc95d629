#include "levymc/paths.hpp"

#include <stdexcept>

namespace levymc {

GridSpec::GridSpec(int level_, int refinement_, double maturity_)
    : level(level_), refinement(refinement_), maturity(maturity_) {
    if (level < 0)
        throw std::invalid_argument("GridSpec: level must be >= 0");
    if (refinement < 2)
        throw std::invalid_argument("GridSpec: refinement factor must be >= 2");
    if (!(maturity > 0.0))
        throw std::invalid_argument("GridSpec: maturity must be > 0");
    n_fine_ = 1;
    for (int l = 0; l < level; ++l) {
        if (n_fine_ > (std::int64_t{1} << 40))
            throw std::invalid_argument("GridSpec: grid too fine");
        n_fine_ *= refinement;
    }
}

void generate_coupled_path(const LevyModel& model, const GridSpec& grid,
                           RngStream& s, PathGrid& out) {
    const std::int64_t n = grid.n_fine();
    const double h = grid.h_fine();

    out.fine_x.resize(static_cast<std::size_t>(n) + 1);
    out.fine_x[0] = 0.0;

    const IncrementSampler increment(model, h);
    double x = 0.0;
    for (std::int64_t j = 1; j <= n; ++j) {
        x += increment(s);
        out.fine_x[static_cast<std::size_t>(j)] = x;
    }

    if (grid.level == 0) {
        out.coarse_x.clear();
        return;
    }
    const std::int64_t nc = grid.n_coarse();
    out.coarse_x.resize(static_cast<std::size_t>(nc) + 1);
    for (std::int64_t k = 0; k <= nc; ++k)
        out.coarse_x[static_cast<std::size_t>(k)] =
            out.fine_x[static_cast<std::size_t>(k * grid.refinement)];
}

PathGrid generate_coupled_path(const LevyModel& model, const GridSpec& grid,
                               RngStream& s) {
    PathGrid out;
    generate_coupled_path(model, grid, s, out);
    return out;
}

} // namespace levymc
