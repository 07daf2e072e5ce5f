#pragma once

#include <cstdint>

#include "vcnet/channel.hpp"
#include "vcnet/geometry.hpp"
#include "vcnet/params.hpp"
#include "vcnet/rng.hpp"

namespace vcnet {

struct OracleEstimate {
  double value = 0.0;
  double std_error = 0.0;
  long n = 0;
};

// -ln E[exp(-s*I)] for the LOS (or NLOS) interference field between
// r_boundary and the region edge, estimated by direct simulation of the
// thinned point process with antenna gains and fading. Shares nothing
// with the quadrature-based evaluation it is used to check. The standard
// error is for the reported exponent (delta method through the log).
// Finite regions only.
OracleEstimate mc_laplace_exponent(double s, double r_boundary, bool is_los,
                                   const SystemParams& params, const FadingModel& model,
                                   long n_realizations, const StreamFamily& streams);

// E[log2(1 + SINR)] given fixed serving distances (LOS, main lobe), with
// interferers of both marks drawn between r.boundary() and the region
// edge. Finite regions only.
OracleEstimate mc_conditional_capacity(const OrderedDistances& r, const SystemParams& params,
                                       const FadingModel& model, long n_realizations,
                                       const StreamFamily& streams);

}  // namespace vcnet
