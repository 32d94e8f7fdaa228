#include "opamech/lyapunov.hpp"

#include <cmath>

namespace opamech {

CovarianceMatrix solve_lyapunov(const DriftMatrix& m, const DiffusionMatrix& d) {
  const StabilityReport rep = is_stable(m.m);
  if (!rep.stable) {
    throw UnstableDrift("Lyapunov solve requires a stable drift matrix (margin = " +
                        std::to_string(rep.margin) + ")");
  }

  // Vectorize M V + V M^T = -D with V stacked row-major: row index r = 8i + j.
  Eigen::MatrixXd K = Eigen::MatrixXd::Zero(64, 64);
  Eigen::VectorXd b(64);
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      const int r = 8 * i + j;
      for (int k = 0; k < 8; ++k) {
        K(r, 8 * k + j) += m.m(i, k);
        K(r, 8 * i + k) += m.m(j, k);
      }
      b(r) = -d.d(i, j);
    }
  }

  Eigen::PartialPivLU<Eigen::MatrixXd> lu(K);
  const Eigen::VectorXd pivots = lu.matrixLU().diagonal().cwiseAbs();
  const double pivot_scale = pivots.maxCoeff();
  if (pivots.minCoeff() <= 1e-14 * pivot_scale) {
    throw SingularSystem("vectorized Lyapunov system has a vanishing pivot");
  }
  const Eigen::VectorXd x = lu.solve(b);

  Matrix8 v;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) v(i, j) = x(8 * i + j);
  v = 0.5 * (v + v.transpose()).eval();

  const double residual = (m.m * v + v * m.m.transpose() + d.d).cwiseAbs().maxCoeff();
  const double bound = 1e-8 * std::max(1.0, d.d.cwiseAbs().maxCoeff());
  if (!(residual <= bound)) {
    throw SingularSystem("Lyapunov residual " + std::to_string(residual) +
                         " exceeds bound " + std::to_string(bound));
  }
  return CovarianceMatrix{v};
}

Matrix8 symplectic_form() {
  Matrix8 omega = Matrix8::Zero();
  for (int b = 0; b < 4; ++b) {
    omega(2 * b, 2 * b + 1) = 1.0;
    omega(2 * b + 1, 2 * b) = -1.0;
  }
  return omega;
}

std::array<double, 4> symplectic_eigenvalues(const CovarianceMatrix& v) {
  const Matrix8 ov = symplectic_form() * v.v;
  Eigen::EigenSolver<Matrix8> es(ov, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) {
    throw ConvergenceFailure("eigensolve of Omega*V did not converge");
  }

  std::array<double, 8> moduli;
  for (int i = 0; i < 8; ++i) {
    const std::complex<double> z = es.eigenvalues()[i];
    if (std::abs(z.real()) > 1e-6 * std::max(std::abs(z), 1e-12)) {
      throw NotSymplecticSpectrum("eigenvalue of Omega*V is not purely imaginary: Re = " +
                                  std::to_string(z.real()));
    }
    moduli[i] = std::abs(z);
  }
  std::sort(moduli.begin(), moduli.end());
  std::array<double, 4> nu;
  for (int k = 0; k < 4; ++k) {
    const double a = moduli[2 * k], b2 = moduli[2 * k + 1];
    if (std::abs(a - b2) > 1e-6 * std::max(b2, 1e-12)) {
      throw NotSymplecticSpectrum("eigenvalues of Omega*V do not pair into +-i nu");
    }
    nu[k] = 0.5 * (a + b2);
  }
  return nu;
}

}  // namespace opamech
