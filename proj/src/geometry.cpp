#include "vcnet/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <random>
#include <stdexcept>

namespace vcnet {

std::vector<ApPoint> sample_ppp(double lambda, double radius, Rng& rng) {
  if (!(lambda > 0.0)) throw std::invalid_argument("sample_ppp: lambda must be positive");
  if (!(radius > 0.0)) throw std::invalid_argument("sample_ppp: radius must be positive");

  const double mean_count = lambda * std::numbers::pi * radius * radius;
  std::poisson_distribution<long> count_dist(mean_count);
  const long n = count_dist(rng);

  std::vector<ApPoint> points;
  points.reserve(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) {
    ApPoint p;
    // uniform_open0 keeps r strictly positive; r = 0 would collide with
    // the typical user and has probability zero anyway.
    p.r = radius * std::sqrt(rng.uniform_open0());
    p.theta = std::numbers::pi - 2.0 * std::numbers::pi * rng.uniform01();  // (-pi, pi]
    p.is_los = false;
    points.push_back(p);
  }

  // Ties broken by angle, then draw order (stable sort).
  std::stable_sort(points.begin(), points.end(), [](const ApPoint& a, const ApPoint& b) {
    if (a.r != b.r) return a.r < b.r;
    return a.theta < b.theta;
  });
  return points;
}

std::vector<ApPoint> mark_blockage(std::vector<ApPoint> points, double beta, Rng& rng) {
  if (!(beta >= 0.0)) throw std::invalid_argument("mark_blockage: beta must be nonnegative");
  for (ApPoint& p : points) {
    p.is_los = rng.uniform01() < los_probability(p.r, beta);
  }
  return points;
}

double los_probability(double r, double beta) {
  if (!(r >= 0.0) || !(beta >= 0.0)) {
    throw std::invalid_argument("los_probability: r and beta must be nonnegative");
  }
  return std::exp(-beta * r);
}

OrderedDistances sample_ordered_distances(double lambda, int k, Rng& rng) {
  if (!(lambda > 0.0)) throw std::invalid_argument("sample_ordered_distances: lambda must be positive");
  if (k < 1) throw std::invalid_argument("sample_ordered_distances: k must be >= 1");

  OrderedDistances out;
  out.values.reserve(static_cast<std::size_t>(k));
  double arrival = 0.0;
  for (int j = 0; j < k; ++j) {
    arrival += rng.exponential(1.0);
    out.values.push_back(std::sqrt(arrival / (std::numbers::pi * lambda)));
  }
  return out;
}

void write_realization_csv(const std::vector<ApPoint>& points, std::ostream& out) {
  out << "r,theta,is_los\n";
  char line[96];
  for (const ApPoint& p : points) {
    std::snprintf(line, sizeof(line), "%.12g,%.12g,%d\n", p.r, p.theta, p.is_los ? 1 : 0);
    out << line;
  }
}

}  // namespace vcnet
