#pragma once

#include <complex>
#include <string_view>
#include <variant>

#include "levymc/rng.hpp"

namespace levymc {

/// Variance Gamma: subordinated Brownian motion with a Gamma clock.
/// sigma is the Brownian volatility, theta the subordinated drift, kappa the
/// subordinator variance rate, r the risk-free rate (all per year).
struct VgParams {
    double sigma;
    double theta;
    double kappa;
    double r;
};

/// Normal Inverse Gaussian: same fields as VG, Inverse Gaussian clock.
struct NigParams {
    double sigma;
    double theta;
    double kappa;
    double r;
};

/// Spectrally one-sided alpha-stable parameters. a_plus/b_minus scale the
/// positive/negative jump tails; pricing requires a_plus = 0 (no positive
/// jumps), the only case with a finite exponential moment.
struct StableParams {
    double alpha;
    double a_plus;
    double b_minus;
    double r;
};

enum class ModelKind { vg, nig, stable };

std::string_view to_string(ModelKind k);

/// Drift m making the discounted asset price a martingale under the pricing
/// measure: E[e^{X_t}] = e^{rt}. Throws std::invalid_argument when the
/// parameters violate their domain (identifying the offending constraint).
double mean_correcting_drift(const VgParams& p);
double mean_correcting_drift(const NigParams& p);
double mean_correcting_drift(const StableParams& p);

/// Exact draw of X_{t+h} - X_t. The drift m is passed explicitly so tests
/// can probe the raw process (m = 0).
double sample_vg_increment(const VgParams& p, double m, double h, RngStream& s);
double sample_nig_increment(const NigParams& p, double m, double h, RngStream& s);
double sample_stable_increment(const StableParams& p, double m, double h, RngStream& s);

/// One of the three calibrated processes plus its cached martingale drift.
class LevyModel {
  public:
    using Params = std::variant<VgParams, NigParams, StableParams>;

    explicit LevyModel(VgParams p);
    explicit LevyModel(NigParams p);
    explicit LevyModel(StableParams p);

    ModelKind kind() const { return static_cast<ModelKind>(params_.index()); }
    const Params& params() const { return params_; }
    double drift() const { return drift_; }
    double rate() const;

    /// Exact increment draw at timestep h under the pricing measure.
    double sample_increment(double h, RngStream& s) const;

    /// E[exp(iu X_t)] including the drift factor. Testing oracle.
    std::complex<double> char_function(double u, double t) const;

  private:
    Params params_;
    double drift_;
};

std::complex<double> char_function(const LevyModel& model, double u, double t);

namespace detail {

/// Chambers-Mallows-Stuck sampler for a standard stable variate with
/// characteristic function exp(-|u|^alpha (1 - i beta sgn(u) tan(pi alpha/2))),
/// alpha != 1. Constants are hoisted so path loops pay only the per-draw cost.
class StableSampler {
  public:
    StableSampler(double alpha, double beta);
    double operator()(RngStream& s) const;

  private:
    double inv_alpha_;
    double shift_;       // atan(beta tan(pi alpha/2)) / alpha
    double scale_;       // (1 + beta^2 tan^2(pi alpha/2))^(1/(2 alpha))
    double tail_exp_;    // (1 - alpha)/alpha
};

} // namespace detail

/// Sampler for the exact increment law at a fixed timestep; resolves the
/// model variant and hoists per-step constants once per grid.
class IncrementSampler {
  public:
    IncrementSampler(const LevyModel& model, double h);
    double operator()(RngStream& s) const;

  private:
    struct Vg {
        double mh, theta, sigma, shape, kappa;
    };
    struct Nig {
        double mh, theta, sigma, mu, lambda;
    };
    struct Stable {
        double mh, scale;
        detail::StableSampler w;
    };
    std::variant<Vg, Nig, Stable> impl_;
};

} // namespace levymc
