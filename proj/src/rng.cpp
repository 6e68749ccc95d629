#include "levymc/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace levymc {

namespace {

// splitmix64 finalizer; bijective on 64-bit words, so distinct stream ids
// stay distinct after mixing.
std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

using u128 = unsigned __int128;

constexpr u128 pcg_mult =
    (u128{2549297995355413924ULL} << 64) | 4865540595714422341ULL;

} // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id) {
    const u128 seq = (u128{mix64(stream_id ^ 0xda3e39cb94b95bdbULL)} << 64) |
                     mix64(stream_id);
    inc_ = (seq << 1) | 1u;
    state_ = 0;
    next_u64();
    state_ += (u128{mix64(seed)} << 64) | mix64(seed ^ 0x6a09e667f3bcc909ULL);
    next_u64();
}

std::uint64_t RngStream::next_u64() {
    const u128 old = state_;
    state_ = old * pcg_mult + inc_;
    const std::uint64_t xored =
        static_cast<std::uint64_t>(old >> 64) ^ static_cast<std::uint64_t>(old);
    const unsigned rot = static_cast<unsigned>(old >> 122);
    return (xored >> rot) | (xored << ((-rot) & 63u));
}

double RngStream::next_uniform() {
    // 53-bit mantissa, offset by half an ulp: range is
    // [2^-54, 1 - 2^-54], never exactly 0 or 1.
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double RngStream::next_normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_normal_;
    }
    double u, v, s;
    do {
        u = 2.0 * next_uniform() - 1.0;
        v = 2.0 * next_uniform() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_normal_ = v * f;
    has_spare_ = true;
    return u * f;
}

double RngStream::next_exponential() {
    return -std::log(next_uniform());
}

double RngStream::next_gamma(double shape) {
    if (!(shape > 0.0))
        throw std::invalid_argument("RngStream::next_gamma: shape must be > 0");

    double boost = 1.0;
    double a = shape;
    if (a < 1.0) {
        // Gamma(a) = Gamma(a+1) * U^(1/a). For a ~ 1e-4 the factor lives far
        // below DBL_MIN most of the time; exp(log(u)/a) underflows to 0
        // instead of producing garbage, which is the correct limit here.
        boost = std::exp(std::log(next_uniform()) / a);
        a += 1.0;
    }

    // Marsaglia-Tsang squeeze method for a >= 1.
    const double d = a - 1.0 / 3.0;
    const double c = 1.0 / (3.0 * std::sqrt(d));
    for (;;) {
        double x, t;
        do {
            x = next_normal();
            t = 1.0 + c * x;
        } while (t <= 0.0);
        const double v = t * t * t;
        const double u = next_uniform();
        if (u < 1.0 - 0.0331 * (x * x) * (x * x))
            return boost * d * v;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v)))
            return boost * d * v;
    }
}

double RngStream::next_inverse_gaussian(double mean, double shape) {
    if (!(mean > 0.0) || !(shape > 0.0))
        throw std::invalid_argument(
            "RngStream::next_inverse_gaussian: mean and shape must be > 0");

    const double z = next_normal();
    const double w = mean * (z * z) / (2.0 * shape);
    // Smaller root of the MSH quadratic, written as mu / (1 + w + sqrt(w(w+2)))
    // to avoid the cancellation in mu(1 + w - sqrt(w(w+2))) at large w.
    const double x = mean / (1.0 + w + std::sqrt(w * (w + 2.0)));
    const double u = next_uniform();
    return (u <= mean / (mean + x)) ? x : mean * mean / x;
}

} // namespace levymc
