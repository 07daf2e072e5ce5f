#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vcnet/analytic.hpp"
#include "vcnet/montecarlo.hpp"
#include "vcnet/params.hpp"
#include "vcnet/selftest.hpp"
#include "vcnet/sweep.hpp"

namespace {

using namespace vcnet;

struct ParamFlags {
  std::string config;
  std::optional<double> lambda;
  std::optional<double> beta;
  std::optional<int> k_serving;
  std::optional<double> finite_region;
  bool infinite_region = false;
};

void add_param_flags(CLI::App* cmd, ParamFlags& flags) {
  cmd->add_option("--config", flags.config, "JSON parameter file")->check(CLI::ExistingFile);
  cmd->add_option("--lambda", flags.lambda, "AP density in APs per square meter");
  cmd->add_option("--beta", flags.beta, "blockage parameter in 1/m");
  cmd->add_option("--k", flags.k_serving, "serving set size K");
  auto* finite =
      cmd->add_option("--finite-region", flags.finite_region, "deployment disk radius in meters");
  auto* infinite = cmd->add_flag("--infinite-region", flags.infinite_region,
                                 "unbounded interference field (analytic methods only)");
  finite->excludes(infinite);
  infinite->excludes(finite);
}

SystemParams resolve_params(const ParamFlags& flags) {
  SystemParams params =
      flags.config.empty() ? SystemParams::defaults() : params_from_json_file(flags.config);
  if (flags.lambda) params.lambda = *flags.lambda;
  if (flags.beta) params.beta = *flags.beta;
  if (flags.k_serving) params.k_serving = *flags.k_serving;
  if (flags.finite_region) params.region_radius = *flags.finite_region;
  if (flags.infinite_region) params.region_radius = kInfiniteRegion;
  return params;
}

struct FadingFlags {
  double n_los = 3.0;
  double n_nlos = 2.0;
  double mu = 1.0;
};

void add_fading_flags(CLI::App* cmd, FadingFlags& flags) {
  cmd->add_option("--n-los", flags.n_los, "Nakagami shape for LOS links");
  cmd->add_option("--n-nlos", flags.n_nlos, "Nakagami shape for NLOS links");
  cmd->add_option("--mu", flags.mu, "Rayleigh mean power");
}

FadingModel model_from_cli(const std::string& name, const FadingFlags& flags) {
  if (name == "nakagami") return FadingModel::nakagami(flags.n_los, flags.n_nlos);
  if (name == "rayleigh") return FadingModel::rayleigh(flags.mu);
  if (name == "nofading") return FadingModel::nofading();
  throw CLI::ValidationError("--model",
                             "unknown model '" + name + "' (nakagami, rayleigh or nofading)");
}

void write_output(const std::string& out_path, const std::function<void(std::ostream&)>& emit) {
  if (out_path.empty()) {
    emit(std::cout);
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file '" + out_path + "'");
  emit(file);
  std::cerr << "wrote " << out_path << "\n";
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Capacity toolkit for user-centric virtual-cell mmWave networks"};
  app.require_subcommand(1);
  int exit_code = 0;

  // capacity: one parameter point, one model, one method
  auto* cap = app.add_subcommand("capacity", "Ergodic capacity at a single parameter point");
  ParamFlags cap_params;
  FadingFlags cap_fading;
  std::string cap_model = "nakagami";
  std::string cap_method = "analytic-sampled";
  std::string cap_mode = "assumption";
  std::string cap_out, cap_trace, cap_dump;
  long cap_trials = 10000;
  long cap_samples = 1024;
  std::uint64_t cap_seed = 0;
  int cap_threads = 0;
  add_param_flags(cap, cap_params);
  add_fading_flags(cap, cap_fading);
  cap->add_option("--model", cap_model, "nakagami, rayleigh or nofading");
  cap->add_option("--method", cap_method, "analytic-sampled, analytic-nested or montecarlo");
  cap->add_option("--mode", cap_mode, "serving-link treatment in simulation: assumption or faithful");
  cap->add_option("--trials", cap_trials, "simulation trials");
  cap->add_option("--samples", cap_samples, "distance draws for analytic-sampled");
  cap->add_option("--seed", cap_seed, "master seed");
  cap->add_option("--threads", cap_threads, "worker threads (0 = all cores)");
  cap->add_option("--out", cap_out, "write CSV here instead of standard output");
  cap->add_option("--trace", cap_trace, "per-trial CSV (montecarlo only)");
  cap->add_option("--dump-realization", cap_dump, "write one sampled realization as CSV");
  cap->callback([&]() {
    const SystemParams params = resolve_params(cap_params);
    const FadingModel model = model_from_cli(cap_model, cap_fading);
    const Method method = method_from_name(cap_method);
    const SimMode mode = sim_mode_from_name(cap_mode);
    validate_or_throw(params, model);

    if (!cap_dump.empty()) {
      const StreamFamily streams(cap_seed);
      const NetworkRealization realization =
          sample_realization(params, model, mode, streams, 0);
      std::ofstream file(cap_dump, std::ios::binary);
      if (!file) throw std::runtime_error("cannot open '" + cap_dump + "'");
      write_realization_csv(realization.aps, file);
      std::cerr << "dumped a realization with " << realization.aps.size() << " APs to "
                << cap_dump << "\n";
    }

    const auto start = std::chrono::steady_clock::now();
    SweepResult result;
    if (!cap_trace.empty()) {
      if (method != Method::montecarlo) {
        throw CLI::ValidationError("--trace", "per-trial traces need --method montecarlo");
      }
      std::ofstream trace(cap_trace, std::ios::binary);
      if (!trace) throw std::runtime_error("cannot open '" + cap_trace + "'");
      McOptions mc;
      mc.n_trials = cap_trials;
      mc.mode = mode;
      mc.master_seed = derive_seed(cap_seed, 0);  // matches row 0 of a sweep
      mc.threads = cap_threads;
      mc.trace = &trace;
      SweepRow row;
      row.swept = SweptParam::lambda;
      row.value = params.lambda;
      row.model = model_name(model);
      row.method = method_name(method);
      row.seed = mc.master_seed;
      row.estimate = estimate_capacity(params, model, mc);
      row.status = "ok";
      result.rows.push_back(row);
      std::cerr << "wrote " << cap_trace << "\n";
    } else {
      SweepSpec spec;
      spec.swept = SweptParam::lambda;
      spec.grid = {params.lambda};
      spec.models = {model};
      spec.methods = {method};
      spec.mc_trials = cap_trials;
      spec.analytic_samples = cap_samples;
      spec.mode = mode;
      spec.master_seed = cap_seed;
      spec.threads = cap_threads;
      result = run_sweep(spec, params);
    }
    std::cerr << "capacity point finished in " << seconds_since(start) << " s\n";
    write_output(cap_out, [&](std::ostream& out) { write_sweep_csv(result, out); });
  });

  // sweep: grid x models x methods
  auto* sweep = app.add_subcommand("sweep", "Capacity over a parameter grid");
  ParamFlags sw_params;
  FadingFlags sw_fading;
  std::string sw_param = "lambda";
  std::vector<double> sw_grid;
  std::vector<std::string> sw_models{"nakagami"};
  std::vector<std::string> sw_methods{"analytic-sampled"};
  std::string sw_mode = "assumption";
  std::string sw_out;
  long sw_trials = 10000;
  long sw_samples = 1024;
  std::uint64_t sw_seed = 0;
  int sw_threads = 0;
  add_param_flags(sweep, sw_params);
  add_fading_flags(sweep, sw_fading);
  sweep->add_option("--param", sw_param, "swept parameter: lambda, beta or k_serving");
  sweep->add_option("--grid", sw_grid, "comma separated grid values")
      ->required()
      ->delimiter(',');
  sweep->add_option("--model", sw_models, "fading models (comma separated)")->delimiter(',');
  sweep->add_option("--method", sw_methods, "methods (comma separated)")->delimiter(',');
  sweep->add_option("--mode", sw_mode, "serving-link treatment in simulation");
  sweep->add_option("--trials", sw_trials, "simulation trials per point");
  sweep->add_option("--samples", sw_samples, "distance draws per analytic-sampled point");
  sweep->add_option("--seed", sw_seed, "master seed");
  sweep->add_option("--threads", sw_threads, "worker threads (0 = all cores)");
  sweep->add_option("--out", sw_out, "write CSV here instead of standard output");
  sweep->callback([&]() {
    const SystemParams base = resolve_params(sw_params);
    SweepSpec spec;
    spec.swept = swept_param_from_name(sw_param);
    spec.grid = sw_grid;
    for (const std::string& name : sw_models) {
      spec.models.push_back(model_from_cli(name, sw_fading));
    }
    for (const std::string& name : sw_methods) {
      spec.methods.push_back(method_from_name(name));
    }
    spec.mc_trials = sw_trials;
    spec.analytic_samples = sw_samples;
    spec.mode = sim_mode_from_name(sw_mode);
    spec.master_seed = sw_seed;
    spec.threads = sw_threads;

    const std::size_t points = spec.grid.size() * spec.models.size() * spec.methods.size();
    std::cerr << "sweep: " << points << " points (" << spec.grid.size() << " grid x "
              << spec.models.size() << " models x " << spec.methods.size() << " methods)\n";
    const auto start = std::chrono::steady_clock::now();
    const SweepResult result = run_sweep(spec, base);
    std::cerr << "sweep finished in " << seconds_since(start) << " s\n";
    write_output(sw_out, [&](std::ostream& out) { write_sweep_csv(result, out); });
  });

  // los-prob: serving-set LOS probability over lambda x K
  auto* los = app.add_subcommand("los-prob", "Probability that all serving APs are LOS");
  ParamFlags los_params;
  std::vector<double> los_lambdas;
  std::vector<int> los_k{1};
  std::string los_out;
  long los_trials = 10000;
  std::uint64_t los_seed = 0;
  int los_threads = 0;
  add_param_flags(los, los_params);
  los->add_option("--grid", los_lambdas, "comma separated lambda values")
      ->required()
      ->delimiter(',');
  los->add_option("--k-grid", los_k, "comma separated K values")->delimiter(',');
  los->add_option("--trials", los_trials, "trials per point");
  los->add_option("--seed", los_seed, "master seed");
  los->add_option("--threads", los_threads, "worker threads (0 = all cores)");
  los->add_option("--out", los_out, "write CSV here instead of standard output");
  los->callback([&]() {
    const SystemParams base = resolve_params(los_params);
    LosProbSpec spec;
    spec.lambdas = los_lambdas;
    spec.k_values = los_k;
    spec.n_trials = los_trials;
    spec.master_seed = los_seed;
    spec.threads = los_threads;
    const auto start = std::chrono::steady_clock::now();
    const LosProbResult result = run_los_probability_sweep(spec, base);
    std::cerr << "los-prob finished in " << seconds_since(start) << " s\n";
    write_output(los_out, [&](std::ostream& out) { write_los_csv(result, out); });
  });

  // selftest: oracle cross-checks
  auto* self = app.add_subcommand("selftest", "Run the internal oracle cross-checks");
  self->callback([&]() { exit_code = run_selftest(std::cout); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
