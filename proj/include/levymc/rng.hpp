#pragma once

#include <cstdint>

namespace levymc {

/// Deterministic random-number stream with substream selection.
///
/// PCG64 (XSL-RR 128/64): the 128-bit LCG increment is derived from the
/// stream id, so distinct ids give structurally distinct full-period
/// sequences and a (seed, stream_id) pair always reproduces the same draws,
/// independent of how work is partitioned across threads or processes.
/// A stream is single-owner: movable between workers, never shared.
class RngStream {
  public:
    RngStream() : RngStream(0, 0) {}
    RngStream(std::uint64_t seed, std::uint64_t stream_id);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

    std::uint64_t next_u64();

    /// Uniform draw strictly inside (0,1). The output transform keeps 0 and 1
    /// unreachable; downstream samplers take logs and reciprocals of these.
    double next_uniform();

    /// Standard normal draw (Marsaglia polar, one spare cached).
    double next_normal();

    /// Exponential(1) draw.
    double next_exponential();

    /// Gamma(shape, scale=1) draw, valid for all shape > 0 including
    /// shape << 1 (Marsaglia-Tsang with the U^(1/a) boost applied in log
    /// space so tiny shapes underflow gracefully instead of losing accuracy).
    double next_gamma(double shape);

    /// Inverse-Gaussian(mean mu, shape lambda) draw via the
    /// Michael-Schucany-Haas two-roots transformation. Exact, constant cost.
    double next_inverse_gaussian(double mean, double shape);

  private:
    using u128 = unsigned __int128;

    u128 state_;
    u128 inc_;
    std::uint64_t seed_;
    std::uint64_t stream_id_;
    double spare_normal_ = 0.0;
    bool has_spare_ = false;
};

} // namespace levymc
