#include "vcnet/oracles.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

namespace vcnet {

namespace {

struct AnnulusPoint {
  double r = 0.0;
  bool is_los = false;
};

// PPP restricted to r_inner < r < region_radius, with blockage marks.
// Radii come from the uniform-area inverse CDF on the annulus.
std::vector<AnnulusPoint> sample_annulus(const SystemParams& params, double r_inner, Rng& rng) {
  const double outer_sq = params.region_radius * params.region_radius;
  const double inner_sq = r_inner * r_inner;
  const double area = std::numbers::pi * (outer_sq - inner_sq);
  std::poisson_distribution<long> count_dist(params.lambda * area);
  const long n = count_dist(rng);

  std::vector<AnnulusPoint> points;
  points.reserve(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) {
    AnnulusPoint p;
    p.r = std::sqrt(inner_sq + rng.uniform01() * (outer_sq - inner_sq));
    p.is_los = rng.uniform01() < los_probability(p.r, params.beta);
    points.push_back(p);
  }
  return points;
}

double interference_of(const std::vector<AnnulusPoint>& points, const SystemParams& params,
                       const FadingModel& model, Rng& rng) {
  double total = 0.0;
  for (const AnnulusPoint& p : points) {
    const double gain = sample_interferer_gain(params, rng).value;
    const double fading = sample_fading_power(model, p.is_los, rng);
    total += gain * path_loss(p.r, p.is_los, params) * fading;
  }
  return total;
}

}  // namespace

OracleEstimate mc_laplace_exponent(double s, double r_boundary, bool is_los,
                                   const SystemParams& params, const FadingModel& model,
                                   long n_realizations, const StreamFamily& streams) {
  if (params.infinite_region()) {
    throw std::invalid_argument("mc_laplace_exponent: finite region required");
  }
  if (!(s >= 0.0)) throw std::domain_error("mc_laplace_exponent: s must be nonnegative");
  if (n_realizations < 2) {
    throw std::invalid_argument("mc_laplace_exponent: need at least 2 realizations");
  }

  OracleEstimate out;
  out.n = n_realizations;
  if (r_boundary >= params.region_radius || s == 0.0) return out;

  std::vector<double> transforms(static_cast<std::size_t>(n_realizations));
  for (long i = 0; i < n_realizations; ++i) {
    Rng rng = streams.stream(static_cast<std::uint64_t>(i), rng_domain::oracle, 0);
    double interference = 0.0;
    for (const AnnulusPoint& p : sample_annulus(params, r_boundary, rng)) {
      if (p.is_los != is_los) continue;  // the two mark fields are independent
      const double gain = sample_interferer_gain(params, rng).value;
      const double fading = sample_fading_power(model, p.is_los, rng);
      interference += gain * path_loss(p.r, p.is_los, params) * fading;
    }
    transforms[static_cast<std::size_t>(i)] = std::exp(-s * interference);
  }

  double sum = 0.0;
  for (double t : transforms) sum += t;
  const double mean = sum / static_cast<double>(n_realizations);
  double sq = 0.0;
  for (double t : transforms) sq += (t - mean) * (t - mean);
  const double se_mean = std::sqrt(
      sq / (static_cast<double>(n_realizations) * static_cast<double>(n_realizations - 1)));

  if (!(mean > 0.0)) {
    throw std::runtime_error("mc_laplace_exponent: transform mean underflowed; s too large");
  }
  out.value = -std::log(mean);
  out.std_error = se_mean / mean;
  return out;
}

OracleEstimate mc_conditional_capacity(const OrderedDistances& r, const SystemParams& params,
                                       const FadingModel& model, long n_realizations,
                                       const StreamFamily& streams) {
  if (params.infinite_region()) {
    throw std::invalid_argument("mc_conditional_capacity: finite region required");
  }
  if (r.k() < 1) {
    throw std::invalid_argument("mc_conditional_capacity: need at least one serving distance");
  }
  if (n_realizations < 2) {
    throw std::invalid_argument("mc_conditional_capacity: need at least 2 realizations");
  }

  std::vector<double> serving_pl(static_cast<std::size_t>(r.k()));
  for (int j = 0; j < r.k(); ++j) {
    serving_pl[static_cast<std::size_t>(j)] =
        params.main_gain * path_loss(r.values[static_cast<std::size_t>(j)], true, params);
  }

  std::vector<double> capacity(static_cast<std::size_t>(n_realizations));
  for (long i = 0; i < n_realizations; ++i) {
    Rng rng = streams.stream(static_cast<std::uint64_t>(i), rng_domain::oracle, 1);
    double desired = 0.0;
    for (double pl : serving_pl) desired += pl * sample_fading_power(model, true, rng);
    const double interference =
        interference_of(sample_annulus(params, r.boundary(), rng), params, model, rng);
    const double sinr = desired / (interference + params.noise_power);
    capacity[static_cast<std::size_t>(i)] = std::log2(1.0 + sinr);
  }

  double sum = 0.0;
  for (double c : capacity) sum += c;
  const double mean = sum / static_cast<double>(n_realizations);
  double sq = 0.0;
  for (double c : capacity) sq += (c - mean) * (c - mean);

  OracleEstimate out;
  out.value = mean;
  out.std_error = std::sqrt(
      sq / (static_cast<double>(n_realizations) * static_cast<double>(n_realizations - 1)));
  out.n = n_realizations;
  return out;
}

}  // namespace vcnet
