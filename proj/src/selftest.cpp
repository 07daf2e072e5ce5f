#include "vcnet/selftest.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "vcnet/analytic.hpp"
#include "vcnet/oracles.hpp"
#include "vcnet/quadrature.hpp"

namespace vcnet {

namespace {

struct Reporter {
  std::ostream& out;
  int failures = 0;

  void check(bool ok, const std::string& what, double got, double want, double tol) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%s %s: got %.10g, reference %.10g, tolerance %.3g\n",
                  ok ? "[ok]  " : "[FAIL]", what.c_str(), got, want, tol);
    out << buf;
    if (!ok) ++failures;
  }
};

void check_log_identity(Reporter& rep) {
  QuadSpec spec;
  spec.rel_tol = 1e-9;
  spec.abs_tol = 1e-14;
  for (double x : {0.1, 1.0, 10.0, 100.0}) {
    // The integrand tends to x at 0; starting at z0 forfeits at most x*z0.
    const double z0 = spec.abs_tol / (1.0 + x);
    auto integrand = [x](double z) { return -std::expm1(-x * z) * std::exp(-z) / z; };
    const QuadResult got = integrate_semi_infinite(integrand, z0, spec);
    const double want = std::log1p(x);
    const bool ok = got.converged && std::abs(got.value - want) <= 1e-8;
    rep.check(ok, "log identity at x=" + std::to_string(x), got.value, want, 1e-8);
  }
}

void check_distance_density_normalization(Reporter& rep) {
  for (int k : {1, 2}) {
    auto one = [](const OrderedDistances&) { return 1.0; };
    const QuadResult got = integrate_nested_ordered(one, 2.5e-3, k);
    const bool ok = got.converged && std::abs(got.value - 1.0) <= 1e-6;
    rep.check(ok, "distance density mass at k=" + std::to_string(k), got.value, 1.0, 1e-6);
  }
}

void check_fading_kernel(Reporter& rep) {
  const StreamFamily streams(18121);
  const FadingModel models[] = {FadingModel::nakagami(3.0, 2.0), FadingModel::rayleigh(1.0),
                                FadingModel::nofading()};
  const long n = 200000;
  for (const FadingModel& model : models) {
    for (double x : {0.5, 5.0}) {
      Rng rng = streams.stream(static_cast<std::uint64_t>(x * 2), rng_domain::fading);
      double sum = 0.0;
      double sq = 0.0;
      for (long i = 0; i < n; ++i) {
        const double v = -std::expm1(-x * sample_fading_power(model, true, rng));
        sum += v;
        sq += v * v;
      }
      const double mean = sum / static_cast<double>(n);
      const double var = (sq - sum * mean) / static_cast<double>(n - 1);
      const double se = std::sqrt(var / static_cast<double>(n));
      const double want = fading_kernel(model, true, x);
      const double tol = 4.0 * se + 1e-12;
      rep.check(std::abs(mean - want) <= tol,
                "fading kernel (" + model_name(model) + ", x=" + std::to_string(x) + ")", mean,
                want, tol);
    }
  }
}

void check_interference_exponent(Reporter& rep) {
  const SystemParams params = SystemParams::defaults();
  const FadingModel model = FadingModel::nakagami(3.0, 2.0);
  const StreamFamily streams(90210);
  struct Point {
    double s;
    double r_boundary;
    bool is_los;
  };
  for (const Point& pt : {Point{1e7, 10.0, true}, Point{1e8, 30.0, true}, Point{1e8, 20.0, false}}) {
    const QuadResult quad = interference_exponent(pt.s, pt.r_boundary, pt.is_los, params, model);
    const OracleEstimate mc =
        mc_laplace_exponent(pt.s, pt.r_boundary, pt.is_los, params, model, 40000, streams);
    const double tol = 3.0 * mc.std_error + quad.error + 1e-9;
    char label[96];
    std::snprintf(label, sizeof(label), "interference exponent (s=%.3g, r=%g, %s)", pt.s,
                  pt.r_boundary, pt.is_los ? "los" : "nlos");
    rep.check(quad.converged && std::abs(quad.value - mc.value) <= tol, label, quad.value,
              mc.value, tol);
  }
}

void check_conditional_capacity(Reporter& rep) {
  SystemParams params = SystemParams::defaults();
  params.k_serving = 2;
  const FadingModel model = FadingModel::nakagami(3.0, 2.0);
  OrderedDistances r;
  r.values = {20.0, 35.0};
  const CapacityEstimate analytic = conditional_capacity(r, params, model);
  const StreamFamily streams(424242);
  const OracleEstimate mc = mc_conditional_capacity(r, params, model, 40000, streams);
  const double tol = 3.0 * mc.std_error + analytic.half_width + 1e-9;
  rep.check(analytic.converged && std::abs(analytic.bits_per_hz - mc.value) <= tol,
            "conditional capacity at r=(20,35)", analytic.bits_per_hz, mc.value, tol);
}

}  // namespace

int run_selftest(std::ostream& out) {
  Reporter rep{out};
  check_log_identity(rep);
  check_distance_density_normalization(rep);
  check_fading_kernel(rep);
  check_interference_exponent(rep);
  check_conditional_capacity(rep);
  out << (rep.failures == 0 ? "selftest: all checks passed\n"
                            : "selftest: " + std::to_string(rep.failures) + " check(s) failed\n");
  return rep.failures;
}

}  // namespace vcnet
