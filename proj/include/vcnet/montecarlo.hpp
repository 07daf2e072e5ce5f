#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "vcnet/analytic.hpp"
#include "vcnet/channel.hpp"
#include "vcnet/geometry.hpp"
#include "vcnet/params.hpp"
#include "vcnet/rng.hpp"

namespace vcnet {

// Treatment of the serving set. `assumption` forces the K serving links
// LOS on the main lobe, mirroring the analytic model; `faithful` keeps
// their sampled blockage marks. Interferers are faithful either way.
enum class SimMode { assumption, faithful };

std::string sim_mode_name(SimMode mode);
SimMode sim_mode_from_name(const std::string& name);

// One sampled network around the typical user: every AP in the disk,
// sorted by distance, the first k_serving cooperating, the rest
// interfering. `aps` keeps the faithful blockage marks; fading was drawn
// under the effective mark.
struct NetworkRealization {
  std::vector<ApPoint> aps;
  std::vector<double> gains;   // main lobe for serving APs
  std::vector<double> fading;
  int k_serving = 0;
  SimMode mode = SimMode::assumption;

  bool serving_is_los(int i) const {
    return mode == SimMode::assumption || aps[static_cast<std::size_t>(i)].is_los;
  }
};

// Draws one realization on trial-indexed streams: the point process and
// every per-AP attribute get their own substream, so a value never depends
// on how many draws preceded it. Under-populated regions are redrawn a
// bounded number of times, then reported as an error.
NetworkRealization sample_realization(const SystemParams& params, const FadingModel& model,
                                      SimMode mode, const StreamFamily& streams,
                                      std::uint64_t trial, long* redraws = nullptr);

// Desired power over interference plus noise for one realization.
double sinr_of_realization(const NetworkRealization& realization, const SystemParams& params);

double simulate_sinr(const SystemParams& params, const FadingModel& model, SimMode mode,
                     const StreamFamily& streams, std::uint64_t trial);

struct McOptions {
  long n_trials = 10000;
  SimMode mode = SimMode::assumption;
  std::uint64_t master_seed = 0;
  int threads = 0;  // 0 = hardware concurrency
  std::ostream* trace = nullptr;  // per-trial CSV when non-null
};

// Sample mean of log2(1 + SINR) over independent trials; half_width is
// the standard error of the mean. Deterministic in (params, model, opts
// minus threads): trial i always uses the same streams.
CapacityEstimate estimate_capacity(const SystemParams& params, const FadingModel& model,
                                   const McOptions& opts);

struct ProbabilityEstimate {
  double p = 0.0;
  double ci_low = 0.0;   // 95% Wilson interval
  double ci_high = 0.0;
  long n = 0;

  double half_width() const { return 0.5 * (ci_high - ci_low); }
};

// Fraction of trials whose k_serving nearest APs are all LOS under the
// faithful marks.
ProbabilityEstimate estimate_serving_los_probability(const SystemParams& params, long n_trials,
                                                     const StreamFamily& streams,
                                                     int threads = 0);

}  // namespace vcnet
