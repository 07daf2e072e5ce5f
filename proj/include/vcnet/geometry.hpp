#pragma once

#include <iosfwd>
#include <vector>

#include "vcnet/rng.hpp"

namespace vcnet {

// One access point in polar coordinates around the typical user at the
// origin, with its blockage mark.
struct ApPoint {
  double r = 0.0;       // meters, >= 0
  double theta = 0.0;   // radians, in (-pi, pi]
  bool is_los = false;
};

// The K smallest AP distances, nondecreasing.
struct OrderedDistances {
  std::vector<double> values;

  int k() const { return static_cast<int>(values.size()); }
  double nearest() const { return values.front(); }
  double boundary() const { return values.back(); }  // r_K, start of the interference field
};

// Homogeneous PPP on a disk of the given radius: point count is
// Poisson(lambda*pi*radius^2), positions i.i.d. uniform on the disk.
// Returned sorted by distance (ties by angle, then draw order); blockage
// marks are left unset.
std::vector<ApPoint> sample_ppp(double lambda, double radius, Rng& rng);

// Independently marks each point LOS with probability exp(-beta*r).
// Positions are untouched; this is the thinning that splits the process
// into independent LOS and NLOS fields.
std::vector<ApPoint> mark_blockage(std::vector<ApPoint> points, double beta, Rng& rng);

// P(link of length r is LOS) = exp(-beta*r).
double los_probability(double r, double beta);

// Draws the K nearest distances of an infinite-plane PPP directly:
// r_j = sqrt(S_j/(pi*lambda)) with S_j the j-th arrival of a unit-rate
// Poisson process. Matches the joint density
// (2*pi*lambda)^K r_1...r_K exp(-pi*lambda*r_K^2) on r_1 <= ... <= r_K.
OrderedDistances sample_ordered_distances(double lambda, int k, Rng& rng);

// CSV dump of a realization: header "r,theta,is_los", one row per point.
void write_realization_csv(const std::vector<ApPoint>& points, std::ostream& out);

}  // namespace vcnet
