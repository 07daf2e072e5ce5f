#include "vcnet/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace vcnet {

std::string swept_param_name(SweptParam param) {
  switch (param) {
    case SweptParam::lambda: return "lambda";
    case SweptParam::beta: return "beta";
    case SweptParam::k_serving: return "k_serving";
  }
  throw std::invalid_argument("swept_param_name: unknown parameter");
}

SweptParam swept_param_from_name(const std::string& name) {
  if (name == "lambda") return SweptParam::lambda;
  if (name == "beta") return SweptParam::beta;
  if (name == "k_serving") return SweptParam::k_serving;
  throw std::invalid_argument("unknown sweep parameter '" + name +
                              "' (expected lambda, beta or k_serving)");
}

namespace {

// Status strings become CSV fields; keep them single-line and comma free.
std::string csv_safe(std::string text) {
  for (char& c : text) {
    if (c == ',' || c == '\n' || c == '\r') c = ';';
  }
  return text;
}

std::string apply_swept(SystemParams& params, SweptParam swept, double value) {
  switch (swept) {
    case SweptParam::lambda:
      params.lambda = value;
      return {};
    case SweptParam::beta:
      params.beta = value;
      return {};
    case SweptParam::k_serving: {
      const double rounded = std::nearbyint(value);
      if (!(value > 0.0) || rounded != value) {
        return "k_serving grid values must be positive integers";
      }
      params.k_serving = static_cast<int>(rounded);
      return {};
    }
  }
  return "unknown swept parameter";
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += "; ";
    out += p;
  }
  return out;
}

}  // namespace

SweepResult run_sweep(const SweepSpec& spec, const SystemParams& base) {
  if (spec.grid.empty()) throw std::invalid_argument("run_sweep: grid must not be empty");
  if (spec.models.empty()) throw std::invalid_argument("run_sweep: model list must not be empty");
  if (spec.methods.empty()) throw std::invalid_argument("run_sweep: method list must not be empty");
  if (spec.mc_trials <= 0 || spec.analytic_samples <= 0) {
    throw std::invalid_argument("run_sweep: per-point budgets must be positive");
  }

  SweepResult result;
  std::uint64_t row_index = 0;
  for (double value : spec.grid) {
    for (const FadingModel& model : spec.models) {
      for (Method method : spec.methods) {
        SweepRow row;
        row.swept = spec.swept;
        row.value = value;
        row.model = model_name(model);
        row.method = method_name(method);
        row.seed = derive_seed(spec.master_seed, row_index);
        row.estimate.bits_per_hz = std::nan("");
        row.estimate.half_width = std::nan("");
        row.estimate.method = method;

        SystemParams params = base;
        std::string fail = apply_swept(params, spec.swept, value);
        if (fail.empty()) {
          const std::vector<std::string> violations = validate(params, model);
          if (!violations.empty()) fail = join(violations);
        }
        if (!fail.empty()) {
          row.status = "error: " + csv_safe(fail);
          result.rows.push_back(row);
          ++row_index;
          continue;
        }

        try {
          if (method == Method::montecarlo) {
            McOptions mc;
            mc.n_trials = spec.mc_trials;
            mc.mode = spec.mode;
            mc.master_seed = row.seed;
            mc.threads = spec.threads;
            row.estimate = estimate_capacity(params, model, mc);
          } else {
            AnalyticOptions opts = spec.analytic;
            opts.n_samples = spec.analytic_samples;
            opts.master_seed = row.seed;
            opts.threads = spec.threads;
            row.estimate = ergodic_capacity(params, model, method, opts);
          }
          row.status = row.estimate.converged ? "ok" : "tolerance-not-met";
        } catch (const std::exception& e) {
          row.estimate.bits_per_hz = std::nan("");
          row.estimate.half_width = std::nan("");
          row.estimate.n = 0;
          row.status = "error: " + csv_safe(e.what());
        }
        result.rows.push_back(row);
        ++row_index;
      }
    }
  }
  return result;
}

void write_sweep_csv(const SweepResult& result, std::ostream& out) {
  out << "swept_param,value,model,method,capacity_bps_hz,half_width,n,seed,status\n";
  char buf[128];
  for (const SweepRow& row : result.rows) {
    std::snprintf(buf, sizeof(buf), "%.12g", row.value);
    out << swept_param_name(row.swept) << ',' << buf << ',' << row.model << ',' << row.method;
    std::snprintf(buf, sizeof(buf), ",%.12g,%.12g,", row.estimate.bits_per_hz,
                  row.estimate.half_width);
    out << buf << row.estimate.n << ',' << row.seed << ',' << row.status << '\n';
  }
}

LosProbResult run_los_probability_sweep(const LosProbSpec& spec, const SystemParams& base) {
  if (spec.lambdas.empty()) {
    throw std::invalid_argument("run_los_probability_sweep: lambda grid must not be empty");
  }
  if (spec.k_values.empty()) {
    throw std::invalid_argument("run_los_probability_sweep: K list must not be empty");
  }
  if (spec.n_trials <= 0) {
    throw std::invalid_argument("run_los_probability_sweep: n_trials must be positive");
  }

  LosProbResult result;
  std::uint64_t lambda_index = 0;
  for (double lambda : spec.lambdas) {
    // All K values at one lambda reuse the same seed, hence the same point
    // process: "all of the K nearest are unblocked" is then literally a
    // sub-event of the same statement for a smaller K, so the probability
    // columns are ordered row by row, not just in expectation.
    const std::uint64_t lambda_seed = derive_seed(spec.master_seed, lambda_index);
    for (int k : spec.k_values) {
      LosProbRow row;
      row.lambda = lambda;
      row.k_serving = k;
      row.seed = lambda_seed;
      row.estimate.p = std::nan("");

      SystemParams params = base;
      params.lambda = lambda;
      params.k_serving = k;
      const std::vector<std::string> violations = validate(params, FadingModel::nofading());
      if (!violations.empty()) {
        row.status = "error: " + csv_safe(join(violations));
      } else {
        try {
          const StreamFamily streams(row.seed);
          row.estimate =
              estimate_serving_los_probability(params, spec.n_trials, streams, spec.threads);
          row.status = "ok";
        } catch (const std::exception& e) {
          row.status = "error: " + csv_safe(e.what());
        }
      }
      result.rows.push_back(row);
    }
    ++lambda_index;
  }
  return result;
}

void write_los_csv(const LosProbResult& result, std::ostream& out) {
  out << "lambda,k_serving,p_all_los,half_width,n,seed,status\n";
  char buf[96];
  for (const LosProbRow& row : result.rows) {
    std::snprintf(buf, sizeof(buf), "%.12g,%d,%.12g,%.12g,", row.lambda, row.k_serving,
                  row.estimate.p, row.estimate.half_width());
    out << buf << row.estimate.n << ',' << row.seed << ',' << row.status << '\n';
  }
}

}  // namespace vcnet
