#pragma once

#include <cstdint>
#include <string>

#include "vcnet/channel.hpp"
#include "vcnet/geometry.hpp"
#include "vcnet/params.hpp"
#include "vcnet/quadrature.hpp"

namespace vcnet {

enum class Method { analytic_sampled, analytic_nested, montecarlo };

// Canonical tag used in CSV output and CLI flags: "analytic-sampled",
// "analytic-nested", "montecarlo".
std::string method_name(Method method);
Method method_from_name(const std::string& name);

struct CapacityEstimate {
  double bits_per_hz = 0.0;
  // Standard error of the mean for stochastic methods; summed quadrature
  // error bound for deterministic ones.
  double half_width = 0.0;
  long n = 0;  // samples behind the estimate, 0 when deterministic
  Method method = Method::analytic_nested;
  bool converged = true;
};

struct AnalyticOptions {
  QuadSpec s_integral;         // half-line integral in the capacity identity
  QuadSpec radial_integral;    // radial integrals inside the exponents
  QuadSpec distance_integral;  // ordered serving-distance integral (nested)
  long n_samples = 1024;       // draws for the sampled distance expectation
  std::uint64_t master_seed = 0;
  int threads = 0;  // 0 = hardware concurrency

  AnalyticOptions() {
    distance_integral.rel_tol = 1e-4;
    distance_integral.abs_tol = 1e-9;
  }
};

// Exponent contributed by the LOS (or NLOS) interference field beyond
// r_boundary to the transform E[exp(-s*I)] = exp(-exponent):
//   2*pi*lambda * Int_{r_boundary}^{U} [ p_main*kernel(s*G_m*C*x^-alpha)
//     + (1-p_main)*kernel(s*G_s*C*x^-alpha) ] * w(x) * x dx
// with w(x) the mark's retention probability and U the region radius
// (half line when the region is infinite). Exactly 0 at s = 0 or when the
// region ends at or before r_boundary.
QuadResult interference_exponent(double s, double r_boundary, bool is_los,
                                 const SystemParams& params, const FadingModel& model,
                                 const QuadSpec& spec = {});

// Ergodic capacity in bits/s/Hz conditioned on the serving distances,
// with serving links LOS on the main lobe. Computed from the identity
// ln(1+x) = Int_0^inf (1 - e^(-x*z)) e^(-z) / z dz applied to the SINR,
// which turns the fading and PPP averages into the exponent terms above.
CapacityEstimate conditional_capacity(const OrderedDistances& r, const SystemParams& params,
                                      const FadingModel& model, const AnalyticOptions& opts = {});

// Ergodic capacity with the serving distances averaged out, either by
// sampling their joint law (any K) or by nested quadrature (K <= 2).
// The montecarlo method lives in estimate_capacity; requesting it here
// is an error.
CapacityEstimate ergodic_capacity(const SystemParams& params, const FadingModel& model,
                                  Method method, const AnalyticOptions& opts = {});

}  // namespace vcnet
