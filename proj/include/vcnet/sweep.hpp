#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "vcnet/analytic.hpp"
#include "vcnet/montecarlo.hpp"
#include "vcnet/params.hpp"

namespace vcnet {

enum class SweptParam { lambda, beta, k_serving };

std::string swept_param_name(SweptParam param);
SweptParam swept_param_from_name(const std::string& name);

struct SweepSpec {
  SweptParam swept = SweptParam::lambda;
  std::vector<double> grid;
  std::vector<FadingModel> models;
  std::vector<Method> methods;
  long mc_trials = 10000;       // montecarlo budget per point
  long analytic_samples = 1024; // sampled-method budget per point
  SimMode mode = SimMode::assumption;
  std::uint64_t master_seed = 0;
  int threads = 0;
  AnalyticOptions analytic;     // tolerance knobs; seed/samples/threads come from above
};

struct SweepRow {
  SweptParam swept = SweptParam::lambda;
  double value = 0.0;
  std::string model;
  std::string method;
  CapacityEstimate estimate;
  std::uint64_t seed = 0;
  std::string status;  // "ok", "tolerance-not-met" or "error: ..."
};

struct SweepResult {
  std::vector<SweepRow> rows;
};

// One row per grid value x model x method, in that nesting order. Each
// row runs on seed derive_seed(master_seed, row_index), so a point's
// result does not depend on which other points are swept. Failures land
// in the row's status and the sweep continues.
SweepResult run_sweep(const SweepSpec& spec, const SystemParams& base);

// Schema: swept_param,value,model,method,capacity_bps_hz,half_width,n,seed,status
void write_sweep_csv(const SweepResult& result, std::ostream& out);

struct LosProbSpec {
  std::vector<double> lambdas;
  std::vector<int> k_values;
  long n_trials = 10000;
  std::uint64_t master_seed = 0;
  int threads = 0;
};

struct LosProbRow {
  double lambda = 0.0;
  int k_serving = 0;
  ProbabilityEstimate estimate;
  std::uint64_t seed = 0;
  std::string status;
};

struct LosProbResult {
  std::vector<LosProbRow> rows;
};

// One row per lambda x K, faithful marks. All K values at one lambda share
// a seed (and therefore a point process), which makes the all-LOS event for
// a larger K a sub-event of the smaller K's row by row.
LosProbResult run_los_probability_sweep(const LosProbSpec& spec, const SystemParams& base);

// Schema: lambda,k_serving,p_all_los,half_width,n,seed,status
void write_los_csv(const LosProbResult& result, std::ostream& out);

}  // namespace vcnet
