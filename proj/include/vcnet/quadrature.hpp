#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <queue>
#include <vector>

#include "vcnet/geometry.hpp"
#include "vcnet/rng.hpp"

namespace vcnet {

// Substitution used to fold (lower, inf) onto (0, 1).
enum class TailTransform {
  rational,  // x = lower + t/(1-t); handles power-law tails
  log,       // x = lower - ln(1-t); suited to exponential tails
};

struct QuadSpec {
  double rel_tol = 1e-6;
  double abs_tol = 1e-12;
  int max_depth = 60;  // bisection limit per panel
  TailTransform tail_transform = TailTransform::rational;
};

// Result of a deterministic integration. When the tolerance could not be
// met within max_depth, `converged` is false and value/error carry the best
// available estimate and bound; no silent wrong answers.
struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  bool converged = false;
  long evals = 0;
};

struct MeanEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  long n = 0;
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule.
inline constexpr double kGk15Nodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
inline constexpr double kGk15Weights[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
inline constexpr double kGauss7Weights[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct Panel {
  double a = 0.0, b = 0.0;
  double value = 0.0, error = 0.0;
  int depth = 0;
  bool finite_values = true;
};

template <class F>
Panel gk15_panel(F& f, double a, double b, int depth, long& evals) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  double kronrod = 0.0;
  double gauss = 0.0;
  bool finite = true;
  for (int i = 0; i < 8; ++i) {
    const double offset = half * kGk15Nodes[i];
    double fsum;
    if (i == 7) {
      fsum = f(center);
      evals += 1;
    } else {
      fsum = f(center - offset) + f(center + offset);
      evals += 2;
    }
    if (!std::isfinite(fsum)) finite = false;
    kronrod += kGk15Weights[i] * fsum;
    if (i % 2 == 1) gauss += kGauss7Weights[i / 2] * fsum;
  }
  kronrod *= half;
  gauss *= half;

  Panel p;
  p.a = a;
  p.b = b;
  p.value = kronrod;
  p.error = std::abs(kronrod - gauss);
  p.depth = depth;
  p.finite_values = finite;
  return p;
}

struct HeapEntry {
  double error;
  std::size_t index;
  bool operator<(const HeapEntry& other) const {
    if (error != other.error) return error < other.error;
    return index > other.index;  // deterministic tie break
  }
};

}  // namespace detail

// Globally adaptive Gauss-Kronrod integration on a finite interval.
// Panels are bisected worst-error-first until the summed error estimate
// drops below max(abs_tol, rel_tol*|I|) or every offending panel has hit
// max_depth. Deterministic: identical inputs give identical panel sets.
template <class F>
QuadResult integrate_adaptive(F&& f, double a, double b, const QuadSpec& spec = {}) {
  QuadResult result;
  if (!(b > a)) {
    result.converged = true;
    return result;
  }

  std::vector<detail::Panel> panels;
  std::priority_queue<detail::HeapEntry> heap;
  panels.push_back(detail::gk15_panel(f, a, b, 0, result.evals));
  heap.push({panels[0].error, 0});

  bool saw_non_finite = !panels[0].finite_values;
  double total_value = panels[0].value;
  double total_error = panels[0].error;

  constexpr std::size_t kMaxPanels = 100000;
  while (!saw_non_finite) {
    const double target = std::max(spec.abs_tol, spec.rel_tol * std::abs(total_value));
    if (total_error <= target) break;
    if (panels.size() + 2 > kMaxPanels) break;

    // Find the worst panel that can still be split.
    detail::HeapEntry worst{0.0, 0};
    bool found = false;
    while (!heap.empty()) {
      worst = heap.top();
      heap.pop();
      if (panels[worst.index].depth < spec.max_depth) {
        found = true;
        break;
      }
    }
    if (!found) break;

    const detail::Panel parent = panels[worst.index];
    const double mid = 0.5 * (parent.a + parent.b);
    if (!(parent.a < mid && mid < parent.b)) break;  // interval at rounding limit

    detail::Panel left = detail::gk15_panel(f, parent.a, mid, parent.depth + 1, result.evals);
    detail::Panel right = detail::gk15_panel(f, mid, parent.b, parent.depth + 1, result.evals);
    saw_non_finite = saw_non_finite || !left.finite_values || !right.finite_values;

    total_value += left.value + right.value - parent.value;
    total_error += left.error + right.error - parent.error;

    panels[worst.index] = left;
    heap.push({left.error, worst.index});
    panels.push_back(right);
    heap.push({right.error, panels.size() - 1});
  }

  // Re-sum in interval order; cheaper on rounding than the running update.
  double value = 0.0;
  double error = 0.0;
  for (const auto& p : panels) {
    value += p.value;
    error += p.error;
  }
  result.value = value;
  result.error = error;
  result.converged = !saw_non_finite &&
                     error <= std::max(spec.abs_tol, spec.rel_tol * std::abs(value));
  return result;
}

// Integral of f over (lower, inf) with an integrable tail, via the
// spec's tail transform onto t in (0, 1) plus adaptive refinement.
template <class F>
QuadResult integrate_semi_infinite(F&& f, double lower, const QuadSpec& spec = {}) {
  auto transformed = [&f, lower, tt = spec.tail_transform](double t) -> double {
    const double one_minus = 1.0 - t;
    if (tt == TailTransform::rational) {
      const double weight = 1.0 / (one_minus * one_minus);
      if (!std::isfinite(weight)) return 0.0;
      return f(lower + t / one_minus) * weight;
    }
    const double weight = 1.0 / one_minus;
    if (!std::isfinite(weight)) return 0.0;
    return f(lower - std::log(one_minus)) * weight;
  };
  return integrate_adaptive(transformed, 0.0, 1.0, spec);
}

// Sample mean of g over the joint law of the K nearest PPP distances,
// with the standard error of the mean. Draw i uses the family stream
// (i, distances), so results do not depend on the worker count.
MeanEstimate expect_over_ordered_domain(const std::function<double(const OrderedDistances&)>& g,
                                        double lambda, int k, long n_samples,
                                        const StreamFamily& streams, int threads = 0);

// Deterministic counterpart of expect_over_ordered_domain for k <= 2:
// tensorized adaptive quadrature of g against the ordered-distance density.
QuadResult integrate_nested_ordered(const std::function<double(const OrderedDistances&)>& g,
                                    double lambda, int k, const QuadSpec& spec = {});

}  // namespace vcnet
