#include "vcnet/analytic.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace vcnet {

std::string method_name(Method method) {
  switch (method) {
    case Method::analytic_sampled: return "analytic-sampled";
    case Method::analytic_nested: return "analytic-nested";
    case Method::montecarlo: return "montecarlo";
  }
  throw std::invalid_argument("method_name: unknown method");
}

Method method_from_name(const std::string& name) {
  if (name == "analytic-sampled") return Method::analytic_sampled;
  if (name == "analytic-nested") return Method::analytic_nested;
  if (name == "montecarlo") return Method::montecarlo;
  throw std::invalid_argument("unknown method '" + name +
                              "' (expected analytic-sampled, analytic-nested or montecarlo)");
}

QuadResult interference_exponent(double s, double r_boundary, bool is_los,
                                 const SystemParams& params, const FadingModel& model,
                                 const QuadSpec& spec) {
  if (!(s >= 0.0)) throw std::domain_error("interference_exponent: s must be nonnegative");
  if (!(r_boundary >= 0.0)) {
    throw std::domain_error("interference_exponent: r_boundary must be nonnegative");
  }

  QuadResult out;
  out.converged = true;
  if (s == 0.0) return out;
  if (!params.infinite_region() && params.region_radius <= r_boundary) return out;

  const double intercept = is_los ? params.c_los : params.c_nlos;
  const double alpha = is_los ? params.alpha_los : params.alpha_nlos;
  const double p_main = params.main_lobe_prob();

  auto integrand = [&](double x) {
    const double attenuation = s * intercept * std::pow(x, -alpha);
    const double p_los = std::exp(-params.beta * x);
    const double weight = is_los ? p_los : 1.0 - p_los;
    const double mix = p_main * fading_kernel(model, is_los, params.main_gain * attenuation) +
                       (1.0 - p_main) * fading_kernel(model, is_los, params.side_gain * attenuation);
    return mix * weight * x;
  };

  QuadResult radial = params.infinite_region()
                          ? integrate_semi_infinite(integrand, r_boundary, spec)
                          : integrate_adaptive(integrand, r_boundary, params.region_radius, spec);
  const double prefactor = 2.0 * std::numbers::pi * params.lambda;
  radial.value *= prefactor;
  radial.error *= prefactor;
  return radial;
}

CapacityEstimate conditional_capacity(const OrderedDistances& r, const SystemParams& params,
                                      const FadingModel& model, const AnalyticOptions& opts) {
  const int k = r.k();
  if (k < 1) throw std::invalid_argument("conditional_capacity: need at least one serving distance");
  if (k != params.k_serving) {
    throw std::invalid_argument("conditional_capacity: distance count must equal k_serving");
  }
  for (int i = 0; i < k; ++i) {
    const double ri = r.values[static_cast<std::size_t>(i)];
    if (!(ri > 0.0) || !std::isfinite(ri)) {
      throw std::invalid_argument("conditional_capacity: distances must be positive and finite");
    }
    if (i > 0 && ri < r.values[static_cast<std::size_t>(i - 1)]) {
      throw std::invalid_argument("conditional_capacity: distances must be nondecreasing");
    }
  }

  const double r1 = r.nearest();
  const double rk = r.boundary();

  // Substituting u = s * G_m * C_L * r_1^(-alpha_L) puts the strongest
  // serving kernel at u of order 1 regardless of geometry, so the
  // integrand's structure always sits in the same decades.
  const double scale = params.main_gain * params.c_los * std::pow(r1, -params.alpha_los);
  const double noise_term = params.noise_power / scale;

  std::vector<double> d(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    d[static_cast<std::size_t>(i)] =
        std::pow(r1 / r.values[static_cast<std::size_t>(i)], params.alpha_los);
  }

  // Near u = 0 the integrand flattens to at most sum_k slope * d_k, so the
  // omitted (0, u_floor) piece is below abs_tol by construction. Starting
  // there sidesteps the 0/0 at the origin.
  const double kernel_slope = model.kind == FadingKind::rayleigh ? model.mu : 1.0;
  double slope_sum = 0.0;
  for (double dk : d) slope_sum += kernel_slope * dk;
  const double u_floor = opts.s_integral.abs_tol / (1.0 + slope_sum);

  bool exponents_converged = true;
  auto integrand = [&](double u) {
    const double s = u / scale;
    const QuadResult e_los = interference_exponent(s, rk, true, params, model, opts.radial_integral);
    const QuadResult e_nlos =
        interference_exponent(s, rk, false, params, model, opts.radial_integral);
    if (!e_los.converged || !e_nlos.converged) exponents_converged = false;

    double log_prod = 0.0;
    for (double dk : d) log_prod += log_fading_laplace(model, true, u * dk);
    const double desired = -std::expm1(log_prod);  // 1 - prod_k E[exp(-u*d_k*g)]
    return std::exp(-u * noise_term - e_los.value - e_nlos.value) * desired / u;
  };

  const QuadResult integral = integrate_semi_infinite(integrand, u_floor, opts.s_integral);

  CapacityEstimate out;
  out.bits_per_hz = integral.value / std::numbers::ln2;
  out.half_width = integral.error / std::numbers::ln2;
  out.n = 0;
  out.method = Method::analytic_nested;
  out.converged = integral.converged && exponents_converged;
  return out;
}

CapacityEstimate ergodic_capacity(const SystemParams& params, const FadingModel& model,
                                  Method method, const AnalyticOptions& opts) {
  validate_or_throw(params, model);

  if (method == Method::montecarlo) {
    throw std::invalid_argument(
        "ergodic_capacity: the montecarlo method is provided by estimate_capacity");
  }

  if (method == Method::analytic_sampled) {
    std::atomic<bool> all_converged{true};
    const StreamFamily streams(opts.master_seed);
    auto g = [&](const OrderedDistances& r) {
      const CapacityEstimate c = conditional_capacity(r, params, model, opts);
      if (!c.converged) all_converged.store(false, std::memory_order_relaxed);
      return c.bits_per_hz;
    };
    const MeanEstimate mean = expect_over_ordered_domain(g, params.lambda, params.k_serving,
                                                         opts.n_samples, streams, opts.threads);
    CapacityEstimate out;
    out.bits_per_hz = mean.mean;
    out.half_width = mean.std_error;
    out.n = mean.n;
    out.method = Method::analytic_sampled;
    out.converged = all_converged.load();
    return out;
  }

  if (params.k_serving > 2) {
    throw std::invalid_argument(
        "ergodic_capacity: analytic-nested supports k_serving <= 2; use analytic-sampled");
  }
  bool all_converged = true;
  auto g = [&](const OrderedDistances& r) {
    const CapacityEstimate c = conditional_capacity(r, params, model, opts);
    if (!c.converged) all_converged = false;
    return c.bits_per_hz;
  };
  const QuadResult integral =
      integrate_nested_ordered(g, params.lambda, params.k_serving, opts.distance_integral);
  CapacityEstimate out;
  out.bits_per_hz = integral.value;
  out.half_width = integral.error;
  out.n = 0;
  out.method = Method::analytic_nested;
  out.converged = integral.converged && all_converged;
  return out;
}

}  // namespace vcnet
