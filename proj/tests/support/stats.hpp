// Test-only statistics helpers: independent oracles for the sampler and
// estimator checks. Nothing here touches the library's accumulators.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

namespace testsupport {

struct RunningStats {
    std::uint64_t n = 0;
    double s1 = 0.0, s2 = 0.0, s3 = 0.0, s4 = 0.0;

    void add(double x) {
        const double x2 = x * x;
        ++n;
        s1 += x;
        s2 += x2;
        s3 += x2 * x;
        s4 += x2 * x2;
    }

    double mean() const { return s1 / static_cast<double>(n); }

    double variance() const {
        const double m = mean();
        return std::max(0.0, s2 / static_cast<double>(n) - m * m);
    }

    double central3() const {
        const double m = mean();
        const double nn = static_cast<double>(n);
        return s3 / nn - 3.0 * m * s2 / nn + 2.0 * m * m * m;
    }

    double central4() const {
        const double m = mean();
        const double nn = static_cast<double>(n);
        return s4 / nn - 4.0 * m * s3 / nn + 6.0 * m * m * s2 / nn -
               3.0 * m * m * m * m;
    }

    double se_mean() const { return std::sqrt(variance() / static_cast<double>(n)); }

    // CLT standard error of the sample variance, from the empirical fourth
    // central moment.
    double se_variance() const {
        const double v = variance();
        return std::sqrt(std::max(0.0, central4() - v * v) /
                         static_cast<double>(n));
    }
};

inline double normal_cdf(double x) {
    return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

// One-sample Kolmogorov-Smirnov statistic against a CDF.
inline double ks_statistic(std::vector<double> xs,
                           const std::function<double(double)>& cdf) {
    std::sort(xs.begin(), xs.end());
    const double nn = static_cast<double>(xs.size());
    double d = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double f = cdf(xs[i]);
        d = std::max(d, std::abs(f - static_cast<double>(i) / nn));
        d = std::max(d, std::abs(static_cast<double>(i + 1) / nn - f));
    }
    return d;
}

// Two-sample Kolmogorov-Smirnov statistic.
inline double two_sample_ks(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] <= b[j])
            ++i;
        else
            ++j;
        const double fa = static_cast<double>(i) / static_cast<double>(a.size());
        const double fb = static_cast<double>(j) / static_cast<double>(b.size());
        d = std::max(d, std::abs(fa - fb));
    }
    return d;
}

// Critical value at the 1% significance level.
inline double two_sample_ks_critical_1pct(std::size_t n, std::size_t m) {
    const double nn = static_cast<double>(n);
    const double mm = static_cast<double>(m);
    return 1.628 * std::sqrt((nn + mm) / (nn * mm));
}

inline double quantile(std::vector<double> xs, double q) {
    std::sort(xs.begin(), xs.end());
    const auto idx = static_cast<std::size_t>(
        q * static_cast<double>(xs.size() - 1) + 0.5);
    return xs[std::min(idx, xs.size() - 1)];
}

} // namespace testsupport
