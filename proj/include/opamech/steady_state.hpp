#pragma once

#include <complex>
#include <vector>

#include "opamech/model.hpp"

namespace opamech {

/// Classical operating point of the driven system. Both cavities and both
/// mirrors share the same steady values by symmetry, so one copy is stored.
struct SteadyState {
  std::complex<double> a_s; ///< cavity amplitude
  double q_s = 0.0;         ///< mirror displacement, g*|a_s|^2
  double p_s = 0.0;         ///< mirror momentum, identically zero
  double delta_eff = 0.0;   ///< effective detuning Delta
  double delta0 = 0.0;      ///< implied bare detuning Delta0 = Delta + g*q_s
  std::complex<double> G;   ///< effective coupling sqrt(2)*g*a_s
};

/// Magnitude below which the steady-state denominator
/// kappa^2 + (Delta+lambda)^2 - 4*Lambda^2 counts as singular.
inline constexpr double kDenominatorEpsilon = 1e-9;

/// Operating point for params carrying the effective detuning directly.
/// Throws DenominatorSingular at the parametric-oscillation threshold.
SteadyState steady_state_given_delta(const PhysicalParams& params);

/// One self-consistent operating point branch, with its linear-stability
/// verdict so the caller can pick among multistable solutions.
struct SteadyStateBranch {
  SteadyState ss;
  bool stable = false;
  double margin = 0.0;
};

/// Operating points for params carrying the bare detuning: solves the
/// fixed-point problem in u = |a_s|^2 (a real quintic after clearing
/// denominators), returning one branch per real root u >= 0, sorted by
/// ascending u. Candidate roots sitting on a singular denominator are
/// discarded. Throws NoRealRoot / RootFindFailure.
std::vector<SteadyStateBranch> steady_state_given_delta0(const PhysicalParams& params);

}  // namespace opamech
