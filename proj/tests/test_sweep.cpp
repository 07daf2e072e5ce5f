#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "vcnet/params.hpp"
#include "vcnet/sweep.hpp"

using namespace vcnet;

namespace {

SweepSpec quick_spec() {
  SweepSpec spec;
  spec.swept = SweptParam::lambda;
  spec.grid = {1e-3, 2.5e-3};
  spec.models = {FadingModel::rayleigh(1.0)};
  spec.methods = {Method::analytic_sampled, Method::montecarlo};
  spec.mc_trials = 5000;
  spec.analytic_samples = 256;
  spec.master_seed = 42;
  return spec;
}

}  // namespace

TEST_CASE("swept parameter names round trip") {
  for (SweptParam p : {SweptParam::lambda, SweptParam::beta, SweptParam::k_serving}) {
    CHECK(swept_param_from_name(swept_param_name(p)) == p);
  }
  CHECK_THROWS_AS(swept_param_from_name("radius"), std::invalid_argument);
}

TEST_CASE("a density sweep reproduces the capacity-versus-density story") {
  const SweepSpec spec = quick_spec();
  const SweepResult result = run_sweep(spec, SystemParams::defaults());
  REQUIRE(result.rows.size() == 4);

  // nesting order: value, then model, then method
  CHECK(result.rows[0].value == 1e-3);
  CHECK(result.rows[0].method == "analytic-sampled");
  CHECK(result.rows[1].value == 1e-3);
  CHECK(result.rows[1].method == "montecarlo");
  CHECK(result.rows[2].value == 2.5e-3);

  for (const SweepRow& row : result.rows) {
    CHECK(row.status == "ok");
    CHECK(std::isfinite(row.estimate.bits_per_hz));
    CHECK(row.model == "rayleigh");
  }

  // denser networks mean more interferers and less rate, for both engines
  CHECK(result.rows[0].estimate.bits_per_hz > result.rows[2].estimate.bits_per_hz);
  CHECK(result.rows[1].estimate.bits_per_hz > result.rows[3].estimate.bits_per_hz);

  // the two engines describe the same network
  for (int i : {0, 2}) {
    const double gap = std::abs(result.rows[static_cast<std::size_t>(i)].estimate.bits_per_hz -
                                result.rows[static_cast<std::size_t>(i + 1)].estimate.bits_per_hz);
    const double budget =
        3.0 * (result.rows[static_cast<std::size_t>(i)].estimate.half_width +
               result.rows[static_cast<std::size_t>(i + 1)].estimate.half_width);
    CHECK(gap <= budget);
  }

  // per-row seeds come from the row position, not from what else ran
  CHECK(result.rows[0].seed != result.rows[1].seed);
}

TEST_CASE("serving more stations pays off at low density") {
  SweepSpec spec;
  spec.swept = SweptParam::k_serving;
  spec.grid = {1.0, 2.0};
  spec.models = {FadingModel::rayleigh(1.0)};
  spec.methods = {Method::montecarlo};
  spec.mc_trials = 20000;
  spec.master_seed = 5;

  SystemParams base = SystemParams::defaults();
  base.lambda = 1e-3;
  const SweepResult result = run_sweep(spec, base);
  REQUIRE(result.rows.size() == 2);
  CHECK(result.rows[0].status == "ok");
  CHECK(result.rows[1].status == "ok");
  CHECK(result.rows[1].estimate.bits_per_hz > result.rows[0].estimate.bits_per_hz);
}

TEST_CASE("sweep rejects empty work and bad budgets") {
  const SystemParams base = SystemParams::defaults();
  SweepSpec spec = quick_spec();

  spec.grid.clear();
  CHECK_THROWS_AS(run_sweep(spec, base), std::invalid_argument);

  spec = quick_spec();
  spec.models.clear();
  CHECK_THROWS_AS(run_sweep(spec, base), std::invalid_argument);

  spec = quick_spec();
  spec.methods.clear();
  CHECK_THROWS_AS(run_sweep(spec, base), std::invalid_argument);

  spec = quick_spec();
  spec.mc_trials = 0;
  CHECK_THROWS_AS(run_sweep(spec, base), std::invalid_argument);
}

TEST_CASE("per-point failures become rows, not aborts") {
  SweepSpec spec = quick_spec();
  spec.grid = {-1.0, 2.5e-3};
  spec.methods = {Method::montecarlo};
  const SweepResult result = run_sweep(spec, SystemParams::defaults());
  REQUIRE(result.rows.size() == 2);

  CHECK(result.rows[0].status.rfind("error: ", 0) == 0);
  CHECK(std::isnan(result.rows[0].estimate.bits_per_hz));
  CHECK(result.rows[1].status == "ok");

  // a method that cannot handle the region reports per row as well
  SweepSpec unbounded = quick_spec();
  unbounded.grid = {2.5e-3};
  unbounded.methods = {Method::montecarlo};
  SystemParams base = SystemParams::defaults();
  base.region_radius = kInfiniteRegion;
  const SweepResult r2 = run_sweep(unbounded, base);
  REQUIRE(r2.rows.size() == 1);
  CHECK(r2.rows[0].status.rfind("error: ", 0) == 0);
  CHECK(r2.rows[0].status.find("finite") != std::string::npos);

  // fractional serving-set sizes cannot be applied
  SweepSpec frac = quick_spec();
  frac.swept = SweptParam::k_serving;
  frac.grid = {1.5};
  frac.methods = {Method::montecarlo};
  const SweepResult r3 = run_sweep(frac, SystemParams::defaults());
  REQUIRE(r3.rows.size() == 1);
  CHECK(r3.rows[0].status.rfind("error: ", 0) == 0);
  CHECK(r3.rows[0].status.find("positive integers") != std::string::npos);
}

TEST_CASE("unmet tolerances are labeled, never hidden") {
  SweepSpec spec = quick_spec();
  spec.grid = {2.5e-3};
  spec.methods = {Method::analytic_sampled};
  spec.analytic_samples = 16;
  spec.analytic.s_integral.rel_tol = 1e-14;
  spec.analytic.s_integral.abs_tol = 1e-300;
  spec.analytic.s_integral.max_depth = 1;

  const SweepResult result = run_sweep(spec, SystemParams::defaults());
  REQUIRE(result.rows.size() == 1);
  CHECK(result.rows[0].status == "tolerance-not-met");
  CHECK(std::isfinite(result.rows[0].estimate.bits_per_hz));
}

TEST_CASE("sweep csv is deterministic down to the byte") {
  SweepSpec spec = quick_spec();
  spec.analytic_samples = 64;
  spec.mc_trials = 500;
  const SystemParams base = SystemParams::defaults();

  std::ostringstream first;
  write_sweep_csv(run_sweep(spec, base), first);

  spec.threads = 1;
  std::ostringstream serial;
  write_sweep_csv(run_sweep(spec, base), serial);

  spec.threads = 4;
  std::ostringstream wide;
  write_sweep_csv(run_sweep(spec, base), wide);

  CHECK(first.str() == serial.str());
  CHECK(serial.str() == wide.str());
  CHECK(first.str().rfind("swept_param,value,model,method,capacity_bps_hz,half_width,n,seed,status\n",
                          0) == 0);
  CHECK(first.str().find("lambda,0.001,rayleigh,analytic-sampled,") != std::string::npos);
}

TEST_CASE("los probability sweep couples every k to one point process") {
  LosProbSpec spec;
  spec.lambdas = {1e-3, 1e-2};
  spec.k_values = {1, 3};
  spec.n_trials = 4000;
  spec.master_seed = 88;

  const LosProbResult result = run_los_probability_sweep(spec, SystemParams::defaults());
  REQUIRE(result.rows.size() == 4);
  for (const LosProbRow& row : result.rows) CHECK(row.status == "ok");

  // same lambda, same seed: the all-clear event for k=3 is a sub-event of k=1
  CHECK(result.rows[0].seed == result.rows[1].seed);
  CHECK(result.rows[0].seed != result.rows[2].seed);
  CHECK(result.rows[1].estimate.p <= result.rows[0].estimate.p);
  CHECK(result.rows[3].estimate.p <= result.rows[2].estimate.p);

  // denser networks put the nearest station closer, so clearer links
  CHECK(result.rows[2].estimate.p > result.rows[0].estimate.p);

  // with no blockers every row is certain
  LosProbSpec clear = spec;
  clear.lambdas = {2.5e-3};
  clear.k_values = {1, 2};
  SystemParams open = SystemParams::defaults();
  open.beta = 0.0;
  const LosProbResult sure = run_los_probability_sweep(clear, open);
  REQUIRE(sure.rows.size() == 2);
  CHECK(sure.rows[0].estimate.p == 1.0);
  CHECK(sure.rows[1].estimate.p == 1.0);
}

TEST_CASE("los probability csv format") {
  LosProbSpec spec;
  spec.lambdas = {2.5e-3};
  spec.k_values = {1};
  spec.n_trials = 1000;

  const SystemParams base = SystemParams::defaults();
  std::ostringstream first;
  write_los_csv(run_los_probability_sweep(spec, base), first);
  std::ostringstream again;
  write_los_csv(run_los_probability_sweep(spec, base), again);

  CHECK(first.str() == again.str());
  CHECK(first.str().rfind("lambda,k_serving,p_all_los,half_width,n,seed,status\n", 0) == 0);
  CHECK(first.str().find("0.0025,1,") != std::string::npos);
  CHECK(first.str().find(",ok\n") != std::string::npos);

  LosProbSpec empty;
  CHECK_THROWS_AS(run_los_probability_sweep(empty, base), std::invalid_argument);
}
