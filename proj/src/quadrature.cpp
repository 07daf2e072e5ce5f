#include "vcnet/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "vcnet/parallel.hpp"

namespace vcnet {

MeanEstimate expect_over_ordered_domain(const std::function<double(const OrderedDistances&)>& g,
                                        double lambda, int k, long n_samples,
                                        const StreamFamily& streams, int threads) {
  if (!(lambda > 0.0)) throw std::invalid_argument("expect_over_ordered_domain: lambda must be positive");
  if (k < 1) throw std::invalid_argument("expect_over_ordered_domain: k must be at least 1");
  if (n_samples < 2) throw std::invalid_argument("expect_over_ordered_domain: need at least 2 samples");

  std::vector<double> values(static_cast<std::size_t>(n_samples));
  detail::parallel_for_index(n_samples, threads, [&](long i) {
    Rng rng = streams.stream(static_cast<std::uint64_t>(i), rng_domain::distances);
    const OrderedDistances r = sample_ordered_distances(lambda, k, rng);
    const double v = g(r);
    if (!std::isfinite(v)) {
      std::ostringstream msg;
      msg << "expect_over_ordered_domain: integrand returned " << v << " at distances (";
      for (int j = 0; j < r.k(); ++j) msg << (j ? ", " : "") << r.values[static_cast<std::size_t>(j)];
      msg << ")";
      throw std::runtime_error(msg.str());
    }
    values[static_cast<std::size_t>(i)] = v;
  });

  // Reduce sequentially in index order so the result is identical for
  // any worker count.
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / static_cast<double>(n_samples);
  double sq = 0.0;
  for (double v : values) sq += (v - mean) * (v - mean);
  const double var_of_mean =
      sq / (static_cast<double>(n_samples) * static_cast<double>(n_samples - 1));

  MeanEstimate out;
  out.mean = mean;
  out.std_error = std::sqrt(var_of_mean);
  out.n = n_samples;
  return out;
}

namespace {

// Joint density of the K nearest distances in the variables u_i = pi
// lambda r_i^2 is flat on the ordered simplex with weight e^{-u_K}.
double radius_from_u(double u, double lambda) {
  return std::sqrt(u / (std::numbers::pi * lambda));
}

}  // namespace

QuadResult integrate_nested_ordered(const std::function<double(const OrderedDistances&)>& g,
                                    double lambda, int k, const QuadSpec& spec) {
  if (!(lambda > 0.0)) throw std::invalid_argument("integrate_nested_ordered: lambda must be positive");
  if (k != 1 && k != 2) {
    throw std::invalid_argument("integrate_nested_ordered: only k_serving = 1 or 2 is supported");
  }

  if (k == 1) {
    OrderedDistances r;
    r.values.resize(1);
    auto integrand = [&](double u) {
      const double weight = std::exp(-u);
      if (weight == 0.0) return 0.0;
      r.values[0] = radius_from_u(u, lambda);
      return g(r) * weight;
    };
    return integrate_semi_infinite(integrand, 0.0, spec);
  }

  QuadSpec inner_spec = spec;
  inner_spec.rel_tol = spec.rel_tol * 0.1;
  inner_spec.abs_tol = spec.abs_tol * 0.1;

  long inner_evals = 0;
  bool inner_converged = true;
  auto outer_integrand = [&](double u2) {
    const double weight = std::exp(-u2);
    if (weight == 0.0) return 0.0;
    OrderedDistances r;
    r.values.resize(2);
    r.values[1] = radius_from_u(u2, lambda);
    auto inner_integrand = [&](double u1) {
      r.values[0] = radius_from_u(u1, lambda);
      return g(r);
    };
    const QuadResult inner = integrate_adaptive(inner_integrand, 0.0, u2, inner_spec);
    inner_evals += inner.evals;
    if (!inner.converged) inner_converged = false;
    return weight * inner.value;
  };

  QuadResult outer = integrate_semi_infinite(outer_integrand, 0.0, spec);
  outer.evals += inner_evals;
  outer.converged = outer.converged && inner_converged;
  return outer;
}

}  // namespace vcnet
