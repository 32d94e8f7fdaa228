#pragma once

#include <array>

#include "opamech/stability.hpp"

namespace opamech {

/// Steady-state covariance matrix of the eight quadrature fluctuations,
/// symmetric by construction, basis (dq1, dp1, dq2, dp2, dx1, dy1, dx2, dy2).
struct CovarianceMatrix {
  Matrix8 v;
};

/// Solve M V + V M^T = -D by vectorizing into a 64x64 linear system
/// (Kronecker sum) and dense partial-pivoting factorization. Re-checks
/// stability (UnstableDrift), guards pivots (SingularSystem), verifies the
/// residual |M V + V M^T + D|_max <= 1e-8 * max(1, |D|_max), and returns the
/// symmetrized solution.
CovarianceMatrix solve_lyapunov(const DriftMatrix& m, const DiffusionMatrix& d);

/// The 8x8 symplectic form: block-diagonal copies of [[0,1],[-1,0]] per mode.
Matrix8 symplectic_form();

/// Moduli of the (purely imaginary) eigenvalue pairs of Omega*V, sorted
/// ascending. A bona fide state has every value >= 1/2 in the
/// vacuum-variance-1/2 convention. Throws NotSymplecticSpectrum if the
/// spectrum of Omega*V is not pure-imaginary pairs to 1e-6 relative.
std::array<double, 4> symplectic_eigenvalues(const CovarianceMatrix& v);

}  // namespace opamech
