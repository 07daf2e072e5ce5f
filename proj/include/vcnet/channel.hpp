#pragma once

#include "vcnet/params.hpp"
#include "vcnet/rng.hpp"

namespace vcnet {

// Antenna gain of one link; always either the main or the side lobe value.
struct LinkGain {
  double value = 1.0;
};

// Distance-dependent attenuation C * r^(-alpha) with the LOS or NLOS
// exponent and intercept. r must be strictly positive.
double path_loss(double r, bool is_los, const SystemParams& params);

// Serving APs steer their beams at the user and always apply the main lobe.
LinkGain serving_gain(const SystemParams& params);

// Interferer boresight is uniform, so the main lobe covers the origin with
// probability beamwidth/(2*pi), the side lobe otherwise.
LinkGain sample_interferer_gain(const SystemParams& params, Rng& rng);

// Draws the fading power |xi|^2 for one link. Nakagami: Gamma(N, 1/N) with
// the mark's shape (unit mean). Rayleigh: exponential with mean mu.
// NoFading: exactly 1.
double sample_fading_power(const FadingModel& model, bool is_los, Rng& rng);

// ln E[exp(-x*g)] for the link's fading power g; always <= 0.
//   Nakagami: -N*log1p(x/N)   Rayleigh: -log1p(mu*x)   NoFading: -x
double log_fading_laplace(const FadingModel& model, bool is_los, double x);

// 1 - E[exp(-x*g)], the kernel every interference exponent and desired
// signal bracket is built from. Nondecreasing in x, 0 at 0, bounded by 1.
double fading_kernel(const FadingModel& model, bool is_los, double x);

}  // namespace vcnet
