#include "vcnet/params.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace vcnet {

double SystemParams::main_lobe_prob() const { return beamwidth / (2.0 * std::numbers::pi); }

FadingModel FadingModel::nakagami(double n_los, double n_nlos) {
  FadingModel m;
  m.kind = FadingKind::nakagami;
  m.n_los = n_los;
  m.n_nlos = n_nlos;
  return m;
}

FadingModel FadingModel::rayleigh(double mu) {
  FadingModel m;
  m.kind = FadingKind::rayleigh;
  m.mu = mu;
  return m;
}

FadingModel FadingModel::nofading() { return FadingModel{}; }

std::string model_name(const FadingModel& model) {
  switch (model.kind) {
    case FadingKind::nakagami: return "nakagami";
    case FadingKind::rayleigh: return "rayleigh";
    case FadingKind::nofading: return "nofading";
  }
  return "unknown";
}

double db_to_linear(double x_db) { return std::pow(10.0, x_db / 10.0); }

double linear_to_db(double x_linear) { return 10.0 * std::log10(x_linear); }

double normalized_noise_power(double bandwidth_hz, double tx_power_dbm, double noise_figure_db) {
  if (!(bandwidth_hz > 0.0)) {
    throw std::invalid_argument("normalized_noise_power: bandwidth must be positive");
  }
  const double db = -174.0 + 10.0 * std::log10(bandwidth_hz) + noise_figure_db - tx_power_dbm;
  return db_to_linear(db);
}

std::vector<std::string> validate(const SystemParams& p, const FadingModel& m) {
  std::vector<std::string> errors;
  auto require = [&errors](bool ok, const char* msg) {
    if (!ok) errors.emplace_back(msg);
  };

  require(p.lambda > 0.0, "lambda > 0 required");
  require(p.beta >= 0.0, "beta >= 0 required");
  require(p.alpha_los >= 2.0, "alpha_los >= 2 required");
  require(p.alpha_nlos > 0.0, "alpha_nlos > 0 required");
  if (p.infinite_region()) {
    // The NLOS interference integral has an x^(1-alpha_nlos) tail; it
    // diverges on an unbounded region unless alpha_nlos > 2.
    require(p.alpha_nlos > 2.0,
            "alpha_nlos must exceed 2 for infinite interference field "
            "(NLOS tail integral diverges)");
  }
  require(p.c_los > 0.0, "c_los > 0 required");
  require(p.c_nlos > 0.0, "c_nlos > 0 required");
  require(p.beamwidth > 0.0 && p.beamwidth <= 2.0 * std::numbers::pi,
          "beamwidth must lie in (0, 2*pi]");
  require(p.side_gain > 0.0, "side_gain > 0 required");
  require(p.main_gain >= p.side_gain, "main_gain >= side_gain required");
  require(p.k_serving >= 1, "k_serving >= 1 required");
  require(p.noise_power > 0.0, "noise_power > 0 required");
  require(p.region_radius > 0.0, "region_radius > 0 required");

  switch (m.kind) {
    case FadingKind::nakagami:
      require(m.n_los >= 1.0, "nakagami n_los >= 1 required");
      require(m.n_nlos >= 1.0, "nakagami n_nlos >= 1 required");
      break;
    case FadingKind::rayleigh:
      require(m.mu > 0.0, "rayleigh mu > 0 required");
      break;
    case FadingKind::nofading:
      break;
  }
  return errors;
}

void validate_or_throw(const SystemParams& p, const FadingModel& m) {
  const auto errors = validate(p, m);
  if (errors.empty()) return;
  std::ostringstream oss;
  oss << "invalid parameters:";
  for (const auto& e : errors) oss << " [" << e << "]";
  throw std::invalid_argument(oss.str());
}

namespace {

// Reads field `name`, or `name_db` converted to linear. Returns true if
// either key was present.
bool read_linear_or_db(const nlohmann::json& j, const std::string& name, double& out) {
  if (j.contains(name)) {
    out = j.at(name).get<double>();
    return true;
  }
  const std::string db_key = name + "_db";
  if (j.contains(db_key)) {
    out = db_to_linear(j.at(db_key).get<double>());
    return true;
  }
  return false;
}

}  // namespace

SystemParams params_from_json_text(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");

  SystemParams p = SystemParams::defaults();
  if (j.contains("lambda")) p.lambda = j.at("lambda").get<double>();
  if (j.contains("beta")) p.beta = j.at("beta").get<double>();
  if (j.contains("alpha_los")) p.alpha_los = j.at("alpha_los").get<double>();
  if (j.contains("alpha_nlos")) p.alpha_nlos = j.at("alpha_nlos").get<double>();
  read_linear_or_db(j, "c_los", p.c_los);
  read_linear_or_db(j, "c_nlos", p.c_nlos);
  read_linear_or_db(j, "main_gain", p.main_gain);
  read_linear_or_db(j, "side_gain", p.side_gain);
  read_linear_or_db(j, "noise_power", p.noise_power);
  if (j.contains("beamwidth")) p.beamwidth = j.at("beamwidth").get<double>();
  if (j.contains("k_serving")) p.k_serving = j.at("k_serving").get<int>();
  if (j.contains("region_radius")) {
    const auto& v = j.at("region_radius");
    if (v.is_string()) {
      const std::string s = v.get<std::string>();
      if (s == "infinite" || s == "inf") {
        p.region_radius = kInfiniteRegion;
      } else {
        throw std::invalid_argument("region_radius: expected a number or \"infinite\"");
      }
    } else {
      p.region_radius = v.get<double>();
    }
  }
  return p;
}

SystemParams params_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return params_from_json_text(buf.str());
}

}  // namespace vcnet
