#include "levymc/models.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace levymc {

namespace {

void check_vg(const VgParams& p) {
    if (!(p.sigma > 0.0))
        throw std::invalid_argument("vg: sigma must be > 0");
    if (!(p.kappa > 0.0))
        throw std::invalid_argument("vg: kappa must be > 0");
    if (!(1.0 - p.theta * p.kappa - 0.5 * p.sigma * p.sigma * p.kappa > 0.0))
        throw std::invalid_argument(
            "vg: drift domain violated, need 1 - theta*kappa - sigma^2*kappa/2 > 0");
}

void check_nig(const NigParams& p) {
    if (!(p.sigma > 0.0))
        throw std::invalid_argument("nig: sigma must be > 0");
    if (!(p.kappa > 0.0))
        throw std::invalid_argument("nig: kappa must be > 0");
    if (!(1.0 - 2.0 * p.theta * p.kappa - p.kappa * p.sigma * p.sigma > 0.0))
        throw std::invalid_argument(
            "nig: drift domain violated, need 1 - 2*theta*kappa - kappa*sigma^2 > 0");
}

void check_stable(const StableParams& p, bool pricing) {
    if (!(p.alpha > 1.0 && p.alpha < 2.0))
        throw std::invalid_argument("stable: alpha must lie in (1,2)");
    if (p.a_plus < 0.0 || p.b_minus < 0.0)
        throw std::invalid_argument("stable: jump coefficients must be >= 0");
    if (!(p.a_plus + p.b_minus > 0.0))
        throw std::invalid_argument("stable: need a_plus + b_minus > 0");
    if (pricing && p.a_plus != 0.0)
        throw std::invalid_argument(
            "stable: pricing requires a_plus = 0 (spectrally negative); "
            "the exponential moment is infinite otherwise");
}

double stable_skew(const StableParams& p) {
    return (p.a_plus - p.b_minus) / (p.a_plus + p.b_minus);
}

} // namespace

std::string_view to_string(ModelKind k) {
    switch (k) {
    case ModelKind::vg: return "vg";
    case ModelKind::nig: return "nig";
    case ModelKind::stable: return "stable";
    }
    return "?";
}

double mean_correcting_drift(const VgParams& p) {
    check_vg(p);
    const double arg = -p.theta * p.kappa - 0.5 * p.sigma * p.sigma * p.kappa;
    return p.r + std::log1p(arg) / p.kappa;
}

double mean_correcting_drift(const NigParams& p) {
    check_nig(p);
    const double arg = 1.0 - 2.0 * p.theta * p.kappa - p.kappa * p.sigma * p.sigma;
    return p.r + (std::sqrt(arg) - 1.0) / p.kappa;
}

double mean_correcting_drift(const StableParams& p) {
    check_stable(p, /*pricing=*/true);
    const double c = p.a_plus + p.b_minus;
    // sec(alpha pi / 2) < 0 on alpha in (1,2), so m < r.
    return p.r + std::pow(c, p.alpha) / std::cos(0.5 * std::numbers::pi * p.alpha);
}

double sample_vg_increment(const VgParams& p, double m, double h, RngStream& s) {
    const double g = p.kappa * s.next_gamma(h / p.kappa);
    return m * h + p.theta * g + p.sigma * std::sqrt(g) * s.next_normal();
}

double sample_nig_increment(const NigParams& p, double m, double h, RngStream& s) {
    const double ig = s.next_inverse_gaussian(h, h * h / p.kappa);
    return m * h + p.theta * ig + p.sigma * std::sqrt(ig) * s.next_normal();
}

double sample_stable_increment(const StableParams& p, double m, double h,
                               RngStream& s) {
    check_stable(p, /*pricing=*/false);
    const detail::StableSampler w(p.alpha, stable_skew(p));
    const double c = p.a_plus + p.b_minus;
    return m * h + c * std::pow(h, 1.0 / p.alpha) * w(s);
}

namespace detail {

StableSampler::StableSampler(double alpha, double beta) {
    if (alpha == 1.0)
        throw std::invalid_argument("stable: alpha = 1 is not supported");
    const double t = beta * std::tan(0.5 * std::numbers::pi * alpha);
    inv_alpha_ = 1.0 / alpha;
    shift_ = std::atan(t) / alpha;
    scale_ = std::pow(1.0 + t * t, 0.5 / alpha);
    tail_exp_ = (1.0 - alpha) / alpha;
}

double StableSampler::operator()(RngStream& s) const {
    const double v = std::numbers::pi * (s.next_uniform() - 0.5);
    const double w = s.next_exponential();
    const double a = (v + shift_) / inv_alpha_; // alpha (V + B)
    return scale_ * std::sin(a) * std::pow(std::cos(v), -inv_alpha_) *
           std::pow(std::cos(v - a) / w, tail_exp_);
}

} // namespace detail

LevyModel::LevyModel(VgParams p)
    : params_(p), drift_(mean_correcting_drift(p)) {}

LevyModel::LevyModel(NigParams p)
    : params_(p), drift_(mean_correcting_drift(p)) {}

LevyModel::LevyModel(StableParams p)
    : params_(p), drift_(mean_correcting_drift(p)) {}

double LevyModel::rate() const {
    return std::visit([](const auto& p) { return p.r; }, params_);
}

double LevyModel::sample_increment(double h, RngStream& s) const {
    return IncrementSampler(*this, h)(s);
}

std::complex<double> LevyModel::char_function(double u, double t) const {
    using namespace std::complex_literals;
    const std::complex<double> drift_factor = std::exp(1i * u * drift_ * t);
    return drift_factor *
           std::visit(
               [&](const auto& p) -> std::complex<double> {
                   using P = std::decay_t<decltype(p)>;
                   if constexpr (std::is_same_v<P, VgParams>) {
                       const std::complex<double> base =
                           1.0 - 1i * u * p.theta * p.kappa +
                           0.5 * p.sigma * p.sigma * u * u * p.kappa;
                       return std::pow(base, -t / p.kappa);
                   } else if constexpr (std::is_same_v<P, NigParams>) {
                       const std::complex<double> root =
                           std::sqrt(1.0 - 2i * u * p.theta * p.kappa +
                                     p.kappa * p.sigma * p.sigma * u * u);
                       return std::exp(t / p.kappa * (1.0 - root));
                   } else {
                       if (u == 0.0)
                           return 1.0;
                       const double c = p.a_plus + p.b_minus;
                       const double beta = stable_skew(p);
                       const double sgn = (u > 0.0) ? 1.0 : -1.0;
                       const std::complex<double> psi =
                           -std::pow(c * std::abs(u), p.alpha) *
                           (1.0 - 1i * beta * sgn *
                                      std::tan(0.5 * std::numbers::pi * p.alpha));
                       return std::exp(t * psi);
                   }
               },
               params_);
}

std::complex<double> char_function(const LevyModel& model, double u, double t) {
    return model.char_function(u, t);
}

IncrementSampler::IncrementSampler(const LevyModel& model, double h)
    : impl_(std::visit(
          [&](const auto& p) -> std::variant<Vg, Nig, Stable> {
              using P = std::decay_t<decltype(p)>;
              const double mh = model.drift() * h;
              if constexpr (std::is_same_v<P, VgParams>) {
                  return Vg{mh, p.theta, p.sigma, h / p.kappa, p.kappa};
              } else if constexpr (std::is_same_v<P, NigParams>) {
                  return Nig{mh, p.theta, p.sigma, h, h * h / p.kappa};
              } else {
                  return Stable{mh,
                                (p.a_plus + p.b_minus) * std::pow(h, 1.0 / p.alpha),
                                detail::StableSampler(p.alpha, stable_skew(p))};
              }
          },
          model.params())) {
    if (!(h > 0.0))
        throw std::invalid_argument("IncrementSampler: timestep must be > 0");
}

double IncrementSampler::operator()(RngStream& s) const {
    return std::visit(
        [&](const auto& im) -> double {
            using I = std::decay_t<decltype(im)>;
            if constexpr (std::is_same_v<I, Vg>) {
                const double g = im.kappa * s.next_gamma(im.shape);
                return im.mh + im.theta * g + im.sigma * std::sqrt(g) * s.next_normal();
            } else if constexpr (std::is_same_v<I, Nig>) {
                const double ig = s.next_inverse_gaussian(im.mu, im.lambda);
                return im.mh + im.theta * ig +
                       im.sigma * std::sqrt(ig) * s.next_normal();
            } else {
                return im.mh + im.scale * im.w(s);
            }
        },
        impl_);
}

} // namespace levymc
