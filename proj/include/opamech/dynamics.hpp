#pragma once

#include <Eigen/Dense>
#include <vector>

#include "opamech/steady_state.hpp"

namespace opamech {

using Matrix8 = Eigen::Matrix<double, 8, 8>;
using Vector8 = Eigen::Matrix<double, 8, 1>;

/// Drift matrix M of the linearized fluctuation dynamics in the basis
/// (dq1, dp1, dq2, dp2, dx1, dy1, dx2, dy2), quadratures dx = (da^+ + da)/sqrt(2),
/// dy = i(da^+ - da)/sqrt(2); vacuum variance 1/2.
struct DriftMatrix {
  Matrix8 m;
};

/// Diagonal diffusion matrix D of the delta-correlated noise:
/// diag[0, gm(2nm+1), 0, gm(2nm+1), k(2na+1), k(2na+1), k(2na+1), k(2na+1)].
struct DiffusionMatrix {
  Matrix8 d;
};

DriftMatrix build_drift(const PhysicalParams& params, const SteadyState& ss);
DiffusionMatrix build_diffusion(const PhysicalParams& params);

/// Mean-field (c-number, noise-free) flow of the full nonlinear equations.
/// State layout: (q1, p1, q2, p2, Re a1, Im a1, Re a2, Im a2). The bare
/// detuning is taken from the params directly in BareDelta0 mode, otherwise
/// from the operating point implied by the given effective detuning.
Vector8 mean_field_rhs(const PhysicalParams& params, const Vector8& state);

struct Trajectory {
  std::vector<double> t;
  std::vector<Vector8> state;
};

/// Fixed-step explicit RK4 integration of the mean-field flow. Throws
/// NonFinite if the state overflows (a legitimate, reportable signature of
/// instability). sample_stride controls output thinning; the final state is
/// always recorded.
Trajectory mean_field_trajectory(const PhysicalParams& params, const Vector8& init,
                                 double t_max, double dt, int sample_stride = 1);

/// Same integration, returning only the final state.
Vector8 mean_field_settle(const PhysicalParams& params, const Vector8& init,
                          double t_max, double dt);

/// Conservative default step: 1e-3 / max(1, |G|, lambda, |Delta|, 2*Lambda),
/// resolving the fastest rate in the linearized spectrum.
double default_mean_field_dt(const PhysicalParams& params);

/// Jacobian of the mean-field flow at `state`, evaluated by central finite
/// differences (step rel_step relative to each coordinate's magnitude) and
/// expressed in the quadrature basis of DriftMatrix, so it is entrywise
/// comparable to build_drift at the fixed point.
Matrix8 mean_field_jacobian(const PhysicalParams& params, const Vector8& state,
                            double rel_step = 1e-6);

/// Operating point as a mean-field state vector (amplitude coordinates).
Vector8 steady_state_vector(const SteadyState& ss);

}  // namespace opamech
