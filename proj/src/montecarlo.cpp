#include "vcnet/montecarlo.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "vcnet/parallel.hpp"

namespace vcnet {

std::string sim_mode_name(SimMode mode) {
  return mode == SimMode::assumption ? "assumption" : "faithful";
}

SimMode sim_mode_from_name(const std::string& name) {
  if (name == "assumption") return SimMode::assumption;
  if (name == "faithful") return SimMode::faithful;
  throw std::invalid_argument("unknown mode '" + name + "' (expected assumption or faithful)");
}

namespace {

constexpr long kMaxRedraws = 1000;

// Redraws the disk until it holds at least k_serving points; the redraw
// loop advances the same geometry stream, so the outcome stays a pure
// function of (seed, trial).
std::vector<ApPoint> sample_populated_disk(const SystemParams& params, Rng& geometry_rng,
                                           long* redraws) {
  for (long attempt = 0;; ++attempt) {
    std::vector<ApPoint> points = sample_ppp(params.lambda, params.region_radius, geometry_rng);
    if (static_cast<int>(points.size()) >= params.k_serving) {
      if (redraws) *redraws += attempt;
      return points;
    }
    if (attempt + 1 >= kMaxRedraws) {
      const double mean_count =
          params.lambda * std::numbers::pi * params.region_radius * params.region_radius;
      std::ostringstream msg;
      msg << "sample_realization: region held fewer than k_serving=" << params.k_serving
          << " APs in " << kMaxRedraws << " consecutive draws (mean count " << mean_count
          << "); raise lambda or region_radius, or lower k_serving";
      throw std::runtime_error(msg.str());
    }
  }
}

}  // namespace

NetworkRealization sample_realization(const SystemParams& params, const FadingModel& model,
                                      SimMode mode, const StreamFamily& streams,
                                      std::uint64_t trial, long* redraws) {
  if (params.infinite_region()) {
    throw std::invalid_argument("sample_realization: simulation needs a finite region_radius");
  }
  if (params.k_serving < 1) {
    throw std::invalid_argument("sample_realization: k_serving must be at least 1");
  }

  Rng geometry_rng = streams.stream(trial, rng_domain::geometry);
  NetworkRealization out;
  out.aps = sample_populated_disk(params, geometry_rng, redraws);
  out.k_serving = params.k_serving;
  out.mode = mode;

  const std::size_t n = out.aps.size();
  out.gains.resize(n);
  out.fading.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rng mark_rng = streams.stream(trial, rng_domain::marks, j);
    out.aps[j].is_los = mark_rng.uniform01() < los_probability(out.aps[j].r, params.beta);

    const bool serving = j < static_cast<std::size_t>(out.k_serving);
    if (serving) {
      out.gains[j] = serving_gain(params).value;
    } else {
      Rng gain_rng = streams.stream(trial, rng_domain::gains, j);
      out.gains[j] = sample_interferer_gain(params, gain_rng).value;
    }

    const bool effective_los = serving ? out.serving_is_los(static_cast<int>(j))
                                       : out.aps[j].is_los;
    Rng fading_rng = streams.stream(trial, rng_domain::fading, j);
    out.fading[j] = sample_fading_power(model, effective_los, fading_rng);
  }
  return out;
}

double sinr_of_realization(const NetworkRealization& realization, const SystemParams& params) {
  const int k = realization.k_serving;
  if (k < 1 || realization.aps.size() < static_cast<std::size_t>(k)) {
    throw std::invalid_argument("sinr_of_realization: realization lacks the serving set");
  }

  double desired = 0.0;
  double interference = 0.0;
  for (std::size_t j = 0; j < realization.aps.size(); ++j) {
    const bool serving = j < static_cast<std::size_t>(k);
    const bool los = serving ? realization.serving_is_los(static_cast<int>(j))
                             : realization.aps[j].is_los;
    const double power = realization.gains[j] *
                         path_loss(realization.aps[j].r, los, params) * realization.fading[j];
    (serving ? desired : interference) += power;
  }
  return desired / (interference + params.noise_power);
}

double simulate_sinr(const SystemParams& params, const FadingModel& model, SimMode mode,
                     const StreamFamily& streams, std::uint64_t trial) {
  return sinr_of_realization(sample_realization(params, model, mode, streams, trial), params);
}

CapacityEstimate estimate_capacity(const SystemParams& params, const FadingModel& model,
                                   const McOptions& opts) {
  validate_or_throw(params, model);
  if (params.infinite_region()) {
    throw std::invalid_argument("estimate_capacity: simulation needs a finite region_radius");
  }
  if (opts.n_trials < 100) {
    throw std::invalid_argument("estimate_capacity: n_trials must be at least 100");
  }

  const StreamFamily streams(opts.master_seed);
  const long n = opts.n_trials;
  const int k = params.k_serving;
  std::vector<double> capacity(static_cast<std::size_t>(n));
  std::vector<double> sinr(opts.trace ? static_cast<std::size_t>(n) : 0);
  std::vector<double> serving_r(opts.trace ? static_cast<std::size_t>(n * k) : 0);

  detail::parallel_for_index(n, opts.threads, [&](long i) {
    const NetworkRealization realization =
        sample_realization(params, model, opts.mode, streams, static_cast<std::uint64_t>(i));
    const double s = sinr_of_realization(realization, params);
    capacity[static_cast<std::size_t>(i)] = std::log2(1.0 + s);
    if (opts.trace) {
      sinr[static_cast<std::size_t>(i)] = s;
      for (int j = 0; j < k; ++j) {
        serving_r[static_cast<std::size_t>(i * k + j)] =
            realization.aps[static_cast<std::size_t>(j)].r;
      }
    }
  });

  if (opts.trace) {
    std::ostream& out = *opts.trace;
    out << "trial,k";
    for (int j = 1; j <= k; ++j) out << ",r_" << j;
    out << ",sinr_db,capacity\n";
    char buf[64];
    for (long i = 0; i < n; ++i) {
      out << i << ',' << k;
      for (int j = 0; j < k; ++j) {
        std::snprintf(buf, sizeof(buf), ",%.12g", serving_r[static_cast<std::size_t>(i * k + j)]);
        out << buf;
      }
      std::snprintf(buf, sizeof(buf), ",%.12g,%.12g\n",
                    linear_to_db(sinr[static_cast<std::size_t>(i)]),
                    capacity[static_cast<std::size_t>(i)]);
      out << buf;
    }
  }

  double sum = 0.0;
  for (double c : capacity) sum += c;
  const double mean = sum / static_cast<double>(n);
  double sq = 0.0;
  for (double c : capacity) sq += (c - mean) * (c - mean);

  CapacityEstimate out;
  out.bits_per_hz = mean;
  out.half_width = std::sqrt(sq / (static_cast<double>(n) * static_cast<double>(n - 1)));
  out.n = n;
  out.method = Method::montecarlo;
  out.converged = true;
  return out;
}

ProbabilityEstimate estimate_serving_los_probability(const SystemParams& params, long n_trials,
                                                     const StreamFamily& streams, int threads) {
  if (params.infinite_region()) {
    throw std::invalid_argument(
        "estimate_serving_los_probability: simulation needs a finite region_radius");
  }
  if (n_trials < 1) {
    throw std::invalid_argument("estimate_serving_los_probability: n_trials must be positive");
  }

  const long n = n_trials;
  const int k = params.k_serving;
  std::vector<char> all_los(static_cast<std::size_t>(n));
  detail::parallel_for_index(n, threads, [&](long i) {
    Rng geometry_rng = streams.stream(static_cast<std::uint64_t>(i), rng_domain::geometry);
    const std::vector<ApPoint> points = sample_populated_disk(params, geometry_rng, nullptr);
    // Same per-AP mark streams as sample_realization, so the serving marks
    // here agree with a full realization of the same trial.
    bool all = true;
    for (int j = 0; j < k && all; ++j) {
      Rng mark_rng =
          streams.stream(static_cast<std::uint64_t>(i), rng_domain::marks, static_cast<std::uint64_t>(j));
      const double r = points[static_cast<std::size_t>(j)].r;
      all = mark_rng.uniform01() < los_probability(r, params.beta);
    }
    all_los[static_cast<std::size_t>(i)] = all ? 1 : 0;
  });

  long count = 0;
  for (char c : all_los) count += c;

  const double z = 1.959963984540054;  // 97.5% normal quantile
  const double nn = static_cast<double>(n);
  const double p_hat = static_cast<double>(count) / nn;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nn;
  const double center = (p_hat + z2 / (2.0 * nn)) / denom;
  const double half = z * std::sqrt(p_hat * (1.0 - p_hat) / nn + z2 / (4.0 * nn * nn)) / denom;

  ProbabilityEstimate out;
  out.p = p_hat;
  out.ci_low = std::max(0.0, center - half);
  out.ci_high = std::min(1.0, center + half);
  out.n = n;
  return out;
}

}  // namespace vcnet
