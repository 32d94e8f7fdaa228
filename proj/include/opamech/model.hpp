#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "opamech/errors.hpp"

namespace opamech {

/// Which detuning the caller supplies: the effective detuning (already
/// including the static radiation-pressure shift) or the bare laser-cavity
/// detuning, from which the operating point is solved self-consistently.
enum class DetuningMode { EffectiveDelta, BareDelta0 };

/// System rates and drive settings, all expressed in units of the mechanical
/// frequency (omega_m == 1 internally). Plain value type; freely copyable and
/// shareable across threads.
struct PhysicalParams {
  double kappa = 0.01;      ///< cavity amplitude decay rate
  double gamma_m = 2e-3;    ///< mechanical damping rate
  double g = 4e-4;          ///< single-photon optomechanical coupling
  double lambda_hop = 20.0; ///< cavity-cavity photon hopping rate
  double drive_E = 0.0;     ///< laser drive amplitude, >= 0
  double opa_gain = 0.0;    ///< parametric gain, >= 0
  double opa_phase = 0.0;   ///< pump phase in radians, stored in [0, 2*pi)
  DetuningMode detuning_mode = DetuningMode::EffectiveDelta;
  double detuning = 0.0;    ///< effective Delta or bare Delta0, per mode
  double n_a = 0.0;         ///< mean thermal photon occupancy
  double n_m = 0.0;         ///< mean thermal phonon occupancy
};

/// Reduce an angle into [0, 2*pi). Exact for inputs already in range.
double reduce_phase(double theta);

/// Check every parameter bound; returns the params with opa_phase reduced
/// mod 2*pi and everything else untouched. Throws InvalidParam on the first
/// violated bound. Idempotent.
PhysicalParams validate(PhysicalParams p);

/// Planck occupancy n = 1 / (exp(hbar*freq / (kB*temp)) - 1). The one helper
/// that takes SI units: freq in rad/s, temp in kelvin. Returns 0 at temp = 0.
double thermal_occupancy(double freq, double temp);

/// Parameter names addressable by the sweep engine and the CLI.
const std::vector<std::string>& sweepable_params();

/// Assign a parameter by name. "delta_eff"/"delta0" also set the detuning
/// mode; "opa_phase" is reduced mod 2*pi on the way in.
void set_param(PhysicalParams& p, std::string_view name, double value);

double get_param(const PhysicalParams& p, std::string_view name);

}  // namespace opamech
