#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <string>

#include "vcnet/quadrature.hpp"

using namespace vcnet;

TEST_CASE("adaptive rule on finite intervals") {
  const QuadResult cube = integrate_adaptive([](double x) { return x * x; }, 0.0, 1.0);
  CHECK(cube.converged);
  CHECK(cube.value == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

  const QuadResult osc =
      integrate_adaptive([](double x) { return std::sin(20.0 * x); }, 0.0, 3.14159265358979324);
  CHECK(osc.converged);
  CHECK(osc.value == doctest::Approx((1.0 - std::cos(20.0 * 3.14159265358979324)) / 20.0)
                         .epsilon(1e-9));

  // degenerate interval
  const QuadResult empty = integrate_adaptive([](double) { return 1.0; }, 2.0, 2.0);
  CHECK(empty.converged);
  CHECK(empty.value == 0.0);
}

TEST_CASE("tolerance failure is reported, not hidden") {
  QuadSpec tight;
  tight.rel_tol = 1e-14;
  tight.abs_tol = 1e-300;
  tight.max_depth = 2;
  const QuadResult r =
      integrate_adaptive([](double x) { return std::sqrt(std::abs(x - 0.3141)); }, 0.0, 1.0, tight);
  CHECK_FALSE(r.converged);
  CHECK(r.error > std::max(tight.abs_tol, tight.rel_tol * std::abs(r.value)));
  // exact: (2/3) * (0.3141^1.5 + 0.6859^1.5) = 0.496068...
  CHECK(r.value == doctest::Approx(0.4960686).epsilon(1e-2));  // estimate still usable
}

TEST_CASE("non-finite integrand values poison convergence") {
  const QuadResult r = integrate_adaptive([](double x) { return 1.0 / (x - 0.5); }, 0.0, 1.0);
  CHECK_FALSE(r.converged);
}

TEST_CASE("semi-infinite transforms") {
  const QuadResult expo = integrate_semi_infinite([](double x) { return std::exp(-x); }, 0.0);
  CHECK(expo.converged);
  CHECK(expo.value == doctest::Approx(1.0).epsilon(1e-9));

  QuadSpec log_spec;
  log_spec.tail_transform = TailTransform::log;
  const QuadResult expo_log =
      integrate_semi_infinite([](double x) { return std::exp(-x); }, 0.0, log_spec);
  CHECK(expo_log.converged);
  CHECK(expo_log.value == doctest::Approx(1.0).epsilon(1e-9));

  const QuadResult tail = integrate_semi_infinite([](double x) { return 1.0 / (x * x); }, 10.0);
  CHECK(tail.converged);
  CHECK(tail.value == doctest::Approx(0.1).epsilon(1e-9));
}

TEST_CASE("log identity via the half-line integral") {
  QuadSpec spec;
  spec.rel_tol = 1e-10;
  spec.abs_tol = 1e-15;
  for (double x : {0.1, 1.0, 10.0, 100.0}) {
    const double z0 = spec.abs_tol / (1.0 + x);  // integrand -> x at 0
    const QuadResult r = integrate_semi_infinite(
        [x](double z) { return -std::expm1(-x * z) * std::exp(-z) / z; }, z0, spec);
    CHECK(r.converged);
    CHECK(std::abs(r.value - std::log1p(x)) <= 1e-8 * std::log1p(x));
  }
}

TEST_CASE("expectation over ordered distances") {
  const StreamFamily streams(55);
  const double lambda = 2.5e-3;

  const MeanEstimate one =
      expect_over_ordered_domain([](const OrderedDistances&) { return 1.0; }, lambda, 3, 1000,
                                 streams);
  CHECK(one.mean == 1.0);
  CHECK(one.std_error == 0.0);
  CHECK(one.n == 1000);

  // E[r_1^2] = 1/(pi*lambda) since pi*lambda*r_1^2 ~ Exp(1)
  const MeanEstimate r1sq = expect_over_ordered_domain(
      [](const OrderedDistances& r) { return r.values[0] * r.values[0]; }, lambda, 1, 40000,
      streams);
  const double want = 1.0 / (3.14159265358979324 * lambda);
  CHECK(std::abs(r1sq.mean - want) <= 4.0 * r1sq.std_error);

  // standard error shrinks like 1/sqrt(n)
  const MeanEstimate small = expect_over_ordered_domain(
      [](const OrderedDistances& r) { return r.values[0]; }, lambda, 1, 20000, streams);
  const MeanEstimate big = expect_over_ordered_domain(
      [](const OrderedDistances& r) { return r.values[0]; }, lambda, 1, 80000, streams);
  CHECK(big.std_error / small.std_error == doctest::Approx(0.5).epsilon(0.15));

  // worker count must not change a single bit
  const auto g = [](const OrderedDistances& r) { return r.values[0]; };
  const MeanEstimate t1 = expect_over_ordered_domain(g, lambda, 2, 5000, streams, 1);
  const MeanEstimate t4 = expect_over_ordered_domain(g, lambda, 2, 5000, streams, 4);
  CHECK(t1.mean == t4.mean);
  CHECK(t1.std_error == t4.std_error);

  CHECK_THROWS_AS(expect_over_ordered_domain(g, lambda, 1, 1, streams), std::invalid_argument);
  CHECK_THROWS_AS(expect_over_ordered_domain(g, 0.0, 1, 100, streams), std::invalid_argument);

  // a non-finite draw aborts and names the offending distances
  try {
    expect_over_ordered_domain(
        [](const OrderedDistances& r) { return r.values[0] > 0.0 ? 1.0 / 0.0 : 0.0; }, lambda, 2,
        100, streams);
    FAIL("expected a runtime error");
  } catch (const std::runtime_error& e) {
    const std::string msg = e.what();
    CHECK(msg.find("inf") != std::string::npos);
    CHECK(msg.find("distances") != std::string::npos);
  }
}

TEST_CASE("nested ordered quadrature") {
  for (double lambda : {1e-4, 2.5e-3, 1e-2}) {
    for (int k : {1, 2}) {
      const QuadResult mass =
          integrate_nested_ordered([](const OrderedDistances&) { return 1.0; }, lambda, k);
      CHECK(mass.converged);
      CHECK(mass.value == doctest::Approx(1.0).epsilon(1e-6));
    }
  }

  // E[e^{-pi lambda r_1^2}] = 1/2 for k=1
  const double lambda = 2.5e-3;
  const QuadResult half = integrate_nested_ordered(
      [lambda](const OrderedDistances& r) {
        return std::exp(-3.14159265358979324 * lambda * r.values[0] * r.values[0]);
      },
      lambda, 1);
  CHECK(half.converged);
  CHECK(half.value == doctest::Approx(0.5).epsilon(1e-6));

  // k=2 cross-check with a separable closed form:
  // E[e^{-pi lambda (r_2^2 - r_1^2)}] with (u_1, u_2-u_1) iid Exp(1) is 1/2.
  const QuadResult gap = integrate_nested_ordered(
      [lambda](const OrderedDistances& r) {
        const double u1 = 3.14159265358979324 * lambda * r.values[0] * r.values[0];
        const double u2 = 3.14159265358979324 * lambda * r.values[1] * r.values[1];
        return std::exp(-(u2 - u1));
      },
      lambda, 2);
  CHECK(gap.converged);
  CHECK(gap.value == doctest::Approx(0.5).epsilon(1e-6));

  auto one = [](const OrderedDistances&) { return 1.0; };
  CHECK_THROWS_AS(integrate_nested_ordered(one, lambda, 3), std::invalid_argument);
  CHECK_THROWS_AS(integrate_nested_ordered(one, 0.0, 1), std::invalid_argument);
}
