#pragma once

#include <array>
#include <complex>
#include <span>

#include "opamech/dynamics.hpp"

namespace opamech {

/// Verdicts with |margin| <= this are treated as marginal, hence unstable.
inline constexpr double kStabilityEpsilon = 1e-9;

/// Routh-array pivots below this (relative to the polynomial scale) abort the
/// algebraic cross-check.
inline constexpr double kRouthPivotEpsilon = 1e-12;

struct StabilityReport {
  bool stable = false;  ///< margin < -kStabilityEpsilon
  double margin = 0.0;  ///< max over eigenvalues of Re
  std::array<std::complex<double>, 8> eigenvalues{};  ///< sorted by descending (Re, Im)
  /// Routh-Hurwitz cross-check on the characteristic polynomial. When a pivot
  /// degenerates the eigenvalue verdict stands alone and routh_available is
  /// false.
  bool routh_available = false;
  bool routh_stable = false;
  bool routh_agrees = false;
};

/// Eigenvalues of a real 8x8 matrix to backward-stable accuracy, sorted by
/// descending real part, ties by descending imaginary part. Throws
/// ConvergenceFailure if the Schur reduction exceeds its sweep budget.
std::array<std::complex<double>, 8> eigenvalues(const Matrix8& m);

/// Coefficients of det(s*I - m) by the trace-based recurrence; coeffs[k] is
/// the coefficient of s^k, coeffs[8] == 1.
std::array<double, 9> characteristic_polynomial(const Matrix8& m);

enum class RouthVerdict { Stable, Unstable, Degenerate };

/// Routh-Hurwitz test on a polynomial with positive leading coefficient;
/// coeffs[k] multiplies s^k. Stable means every root lies in the open left
/// half plane; Degenerate flags a pivot below kRouthPivotEpsilon * scale.
RouthVerdict routh_hurwitz(std::span<const double> coeffs);

/// Stability decision from the eigenvalue margin, with the Routh-Hurwitz
/// array run as an independent cross-check and any disagreement recorded.
StabilityReport is_stable(const Matrix8& m);

}  // namespace opamech
