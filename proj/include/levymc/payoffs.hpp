#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "levymc/paths.hpp"

namespace levymc {

enum class OptionKind { asian_call, lookback_put, up_out_barrier_call };

std::string_view to_string(OptionKind k);

/// Payoff description. All payoffs are evaluated discounted (the e^{-rT}
/// factor lives here, not in the estimator). The barrier B is only
/// meaningful for the up-and-out call.
struct OptionSpec {
    OptionKind kind;
    double spot;     // S0
    double strike;   // K
    double barrier;  // B, up-and-out only
    double maturity; // T, years
    double rate;     // discount rate r

    static OptionSpec asian_call(double spot, double strike, double maturity,
                                 double rate);
    static OptionSpec lookback_put(double spot, double strike, double maturity,
                                   double rate);
    static OptionSpec up_out_barrier_call(double spot, double strike,
                                          double barrier, double maturity,
                                          double rate);
};

/// Discounted arithmetic-Asian call on the trapezoidal average of S0 e^{X_t}
/// over the grid values x (uniform on [0,T], x[0] at t=0).
double asian_trapezoidal(std::span<const double> x, const OptionSpec& spec);

/// Discounted lookback put on the discretely monitored maximum; the max
/// includes the j=0 point, so the running maximum of S is at least S0.
double lookback_put(std::span<const double> x, const OptionSpec& spec);

/// Discounted up-and-out call: terminal call payoff, knocked out to zero
/// unless the discrete running maximum of S stays strictly below B.
double barrier_up_out(std::span<const double> x, const OptionSpec& spec);

/// Dispatch to the payoff named by spec.kind.
double evaluate(std::span<const double> x, const OptionSpec& spec);

/// Fine- and coarse-resolution payoffs of one coupled path.
struct PayoffPair {
    double fine;
    std::optional<double> coarse; // absent at level 0
};

PayoffPair evaluate_pair(const PathGrid& path, const OptionSpec& spec);

} // namespace levymc
