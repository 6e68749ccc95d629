#include "levymc/payoffs.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace levymc {

namespace {

void validate(const OptionSpec& s) {
    if (!(s.spot > 0.0))
        throw std::invalid_argument("option: spot must be > 0");
    if (s.strike < 0.0)
        throw std::invalid_argument("option: strike must be >= 0");
    if (!(s.maturity > 0.0))
        throw std::invalid_argument("option: maturity must be > 0");
    if (s.kind == OptionKind::up_out_barrier_call) {
        if (!(s.barrier > s.spot))
            throw std::invalid_argument("option: barrier must lie above spot");
        if (!(s.barrier > s.strike))
            throw std::invalid_argument("option: barrier must lie above strike");
    }
}

double max_log(std::span<const double> x) {
    double m = x[0];
    for (double v : x.subspan(1))
        m = std::max(m, v);
    return m;
}

} // namespace

std::string_view to_string(OptionKind k) {
    switch (k) {
    case OptionKind::asian_call: return "asian";
    case OptionKind::lookback_put: return "lookback";
    case OptionKind::up_out_barrier_call: return "barrier";
    }
    return "?";
}

OptionSpec OptionSpec::asian_call(double spot, double strike, double maturity,
                                  double rate) {
    OptionSpec s{OptionKind::asian_call, spot, strike, 0.0, maturity, rate};
    validate(s);
    return s;
}

OptionSpec OptionSpec::lookback_put(double spot, double strike, double maturity,
                                    double rate) {
    OptionSpec s{OptionKind::lookback_put, spot, strike, 0.0, maturity, rate};
    validate(s);
    return s;
}

OptionSpec OptionSpec::up_out_barrier_call(double spot, double strike,
                                           double barrier, double maturity,
                                           double rate) {
    OptionSpec s{OptionKind::up_out_barrier_call, spot,     strike,
                 barrier,                         maturity, rate};
    validate(s);
    return s;
}

double asian_trapezoidal(std::span<const double> x, const OptionSpec& spec) {
    // S0/T sum_j h/2 (e^{x_j} + e^{x_{j+1}}) == S0 h/T (e^{x_0}/2 + e^{x_1}
    // + ... + e^{x_{n-1}} + e^{x_n}/2).
    const std::size_t n = x.size() - 1;
    double acc = 0.5 * (std::exp(x[0]) + std::exp(x[n]));
    for (std::size_t j = 1; j < n; ++j)
        acc += std::exp(x[j]);
    const double avg = spec.spot * acc / static_cast<double>(n);
    return std::exp(-spec.rate * spec.maturity) *
           std::max(0.0, avg - spec.strike);
}

double lookback_put(std::span<const double> x, const OptionSpec& spec) {
    const double max_s = spec.spot * std::exp(max_log(x));
    return std::exp(-spec.rate * spec.maturity) *
           std::max(0.0, spec.strike - max_s);
}

double barrier_up_out(std::span<const double> x, const OptionSpec& spec) {
    // Strict inequality keeps the option alive; a touch of B knocks out.
    const double max_s = spec.spot * std::exp(max_log(x));
    if (!(max_s < spec.barrier))
        return 0.0;
    const double terminal = spec.spot * std::exp(x[x.size() - 1]);
    return std::exp(-spec.rate * spec.maturity) *
           std::max(0.0, terminal - spec.strike);
}

double evaluate(std::span<const double> x, const OptionSpec& spec) {
    switch (spec.kind) {
    case OptionKind::asian_call: return asian_trapezoidal(x, spec);
    case OptionKind::lookback_put: return lookback_put(x, spec);
    case OptionKind::up_out_barrier_call: return barrier_up_out(x, spec);
    }
    throw std::logic_error("evaluate: unknown option kind");
}

PayoffPair evaluate_pair(const PathGrid& path, const OptionSpec& spec) {
    PayoffPair pair{evaluate(path.fine_x, spec), std::nullopt};
    if (!path.coarse_x.empty())
        pair.coarse = evaluate(path.coarse_x, spec);
    return pair;
}

} // namespace levymc
