#include "vcnet/channel.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace vcnet {

double path_loss(double r, bool is_los, const SystemParams& params) {
  if (!(r > 0.0)) {
    throw std::domain_error("path_loss: r must be strictly positive");
  }
  return is_los ? params.c_los * std::pow(r, -params.alpha_los)
                : params.c_nlos * std::pow(r, -params.alpha_nlos);
}

LinkGain serving_gain(const SystemParams& params) { return LinkGain{params.main_gain}; }

LinkGain sample_interferer_gain(const SystemParams& params, Rng& rng) {
  const bool main_lobe = rng.uniform01() < params.main_lobe_prob();
  return LinkGain{main_lobe ? params.main_gain : params.side_gain};
}

double sample_fading_power(const FadingModel& model, bool is_los, Rng& rng) {
  switch (model.kind) {
    case FadingKind::nakagami: {
      const double n = is_los ? model.n_los : model.n_nlos;
      std::gamma_distribution<double> gamma(n, 1.0 / n);
      return gamma(rng);
    }
    case FadingKind::rayleigh:
      return rng.exponential(model.mu);
    case FadingKind::nofading:
      return 1.0;
  }
  return 1.0;
}

double log_fading_laplace(const FadingModel& model, bool is_los, double x) {
  if (!(x >= 0.0)) {
    throw std::domain_error("fading kernel: x must be nonnegative");
  }
  switch (model.kind) {
    case FadingKind::nakagami: {
      // log1p keeps (1+x/N)^(-N) accurate for large N and small x.
      const double n = is_los ? model.n_los : model.n_nlos;
      return -n * std::log1p(x / n);
    }
    case FadingKind::rayleigh:
      return -std::log1p(model.mu * x);
    case FadingKind::nofading:
      return -x;
  }
  return 0.0;
}

double fading_kernel(const FadingModel& model, bool is_los, double x) {
  return -std::expm1(log_fading_laplace(model, is_los, x));
}

}  // namespace vcnet
