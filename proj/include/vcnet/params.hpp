#pragma once

#include <limits>
#include <string>
#include <vector>

namespace vcnet {

inline constexpr double kInfiniteRegion = std::numeric_limits<double>::infinity();

// Deployment and link-budget constants shared by the analytic engine and
// the simulator. All gains and powers are linear; dB appears only at I/O
// boundaries (config files, CLI flags).
struct SystemParams {
  double lambda = 2.5e-3;      // AP density, APs per square meter
  double beta = 0.0071;        // blockage parameter, 1/m; P(LOS at r) = exp(-beta*r)
  double alpha_los = 2.0;      // LOS path loss exponent
  double alpha_nlos = 4.0;     // NLOS path loss exponent
  double c_los = 1e-7;         // LOS path loss intercept, linear
  double c_nlos = 1e-7;        // NLOS path loss intercept, linear
  double main_gain = 63.09573444801933;  // main lobe gain, linear (18 dB)
  double side_gain = 0.6309573444801932; // side lobe gain, linear (-2 dB)
  double beamwidth = 0.17453292519943295; // beamwidth, radians (10 deg)
  double noise_power = 7.962143411069941e-11; // noise normalized by tx power
  int k_serving = 2;           // cooperative serving set size K
  double region_radius = 100.0; // deployment disk radius in meters, or
                                // kInfiniteRegion for an unbounded
                                // interference field (analytic only)

  // 73 GHz dense urban defaults: B = 2 GHz, Pt = 30 dBm, NF = 10 dB.
  static SystemParams defaults() { return SystemParams{}; }

  bool infinite_region() const { return region_radius == kInfiniteRegion; }

  // Probability that an interferer's main lobe covers the origin.
  double main_lobe_prob() const;
};

enum class FadingKind { nakagami, rayleigh, nofading };

// Small-scale fading power |xi|^2 model. Nakagami keeps separate shape
// parameters per blockage mark; Rayleigh power is exponential with mean mu
// (the convention matching 1/(1+mu*s) as its Laplace transform).
struct FadingModel {
  FadingKind kind = FadingKind::nofading;
  double n_los = 1.0;
  double n_nlos = 1.0;
  double mu = 1.0;

  static FadingModel nakagami(double n_los, double n_nlos);
  static FadingModel rayleigh(double mu);
  static FadingModel nofading();
};

// Canonical lowercase tag used in CSV output and CLI flags.
std::string model_name(const FadingModel& model);

double db_to_linear(double x_db);
double linear_to_db(double x_linear);

// Thermal noise power normalized by transmit power:
// 10^((-174 + 10*log10(B) + NF - Pt)/10).
double normalized_noise_power(double bandwidth_hz, double tx_power_dbm,
                              double noise_figure_db = 10.0);

// Returns every violated invariant as a named diagnostic; empty means valid.
std::vector<std::string> validate(const SystemParams& params, const FadingModel& model);

// Throws std::invalid_argument listing all violations.
void validate_or_throw(const SystemParams& params, const FadingModel& model);

// Flat key-value JSON config. Field names match SystemParams members;
// main_gain, side_gain, noise_power, c_los and c_nlos may instead be given
// in dB under the same key suffixed "_db". region_radius accepts a number
// or the string "infinite".
SystemParams params_from_json_text(const std::string& json_text);
SystemParams params_from_json_file(const std::string& path);

}  // namespace vcnet
