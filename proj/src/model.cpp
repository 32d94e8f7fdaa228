#include "opamech/model.hpp"

#include <cmath>
#include <numbers>

namespace opamech {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
// CODATA / exact SI values.
constexpr double kHbar = 1.054571817e-34;  // J s
constexpr double kBoltzmann = 1.380649e-23;  // J / K
}  // namespace

double reduce_phase(double theta) {
  if (theta >= 0.0 && theta < kTwoPi) return theta;
  double r = std::fmod(theta, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

PhysicalParams validate(PhysicalParams p) {
  p.opa_phase = reduce_phase(p.opa_phase);
  auto require = [](bool ok, const char* name, double value, const char* constraint) {
    if (!ok) throw InvalidParam(name, value, constraint);
  };
  require(p.kappa > 0.0, "kappa", p.kappa, "> 0");
  require(p.gamma_m > 0.0, "gamma_m", p.gamma_m, "> 0");
  require(p.g >= 0.0, "g", p.g, ">= 0");
  require(p.lambda_hop >= 0.0, "lambda_hop", p.lambda_hop, ">= 0");
  require(p.drive_E >= 0.0, "drive_E", p.drive_E, ">= 0");
  require(p.opa_gain >= 0.0, "opa_gain", p.opa_gain, ">= 0");
  require(p.n_a >= 0.0, "n_a", p.n_a, ">= 0");
  require(p.n_m >= 0.0, "n_m", p.n_m, ">= 0");
  require(std::isfinite(p.detuning), "detuning", p.detuning, "finite");
  require(std::isfinite(p.opa_phase), "opa_phase", p.opa_phase, "finite");
  return p;
}

double thermal_occupancy(double freq, double temp) {
  if (!(freq > 0.0)) throw InvalidParam("freq", freq, "> 0");
  if (!(temp >= 0.0)) throw InvalidParam("temp", temp, ">= 0");
  if (temp == 0.0) return 0.0;
  const double x = kHbar * freq / (kBoltzmann * temp);
  return 1.0 / std::expm1(x);
}

const std::vector<std::string>& sweepable_params() {
  static const std::vector<std::string> names = {
      "opa_gain", "opa_phase", "drive_E", "lambda_hop", "delta_eff",
      "n_m",      "n_a",       "kappa",   "gamma_m",    "g"};
  return names;
}

void set_param(PhysicalParams& p, std::string_view name, double value) {
  if (name == "kappa") p.kappa = value;
  else if (name == "gamma_m") p.gamma_m = value;
  else if (name == "g") p.g = value;
  else if (name == "lambda_hop") p.lambda_hop = value;
  else if (name == "drive_E") p.drive_E = value;
  else if (name == "opa_gain") p.opa_gain = value;
  else if (name == "opa_phase") p.opa_phase = reduce_phase(value);
  else if (name == "delta_eff") {
    p.detuning_mode = DetuningMode::EffectiveDelta;
    p.detuning = value;
  } else if (name == "delta0") {
    p.detuning_mode = DetuningMode::BareDelta0;
    p.detuning = value;
  } else if (name == "n_a") p.n_a = value;
  else if (name == "n_m") p.n_m = value;
  else throw InvalidParam(std::string(name), value, "a known parameter name");
}

double get_param(const PhysicalParams& p, std::string_view name) {
  if (name == "kappa") return p.kappa;
  if (name == "gamma_m") return p.gamma_m;
  if (name == "g") return p.g;
  if (name == "lambda_hop") return p.lambda_hop;
  if (name == "drive_E") return p.drive_E;
  if (name == "opa_gain") return p.opa_gain;
  if (name == "opa_phase") return p.opa_phase;
  if (name == "delta_eff" || name == "delta0") return p.detuning;
  if (name == "n_a") return p.n_a;
  if (name == "n_m") return p.n_m;
  throw InvalidParam(std::string(name), 0.0, "a known parameter name");
}

}  // namespace opamech
