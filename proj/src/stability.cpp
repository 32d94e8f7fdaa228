#include "opamech/stability.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace opamech {

std::array<std::complex<double>, 8> eigenvalues(const Matrix8& m) {
  if (!m.allFinite()) throw InvalidParam("m", 0.0, "finite entries");
  Eigen::EigenSolver<Matrix8> es(m, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) {
    throw ConvergenceFailure("Schur reduction exceeded its iteration budget");
  }
  std::array<std::complex<double>, 8> ev;
  for (int i = 0; i < 8; ++i) ev[i] = es.eigenvalues()[i];
  std::sort(ev.begin(), ev.end(), [](const auto& a, const auto& b) {
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
  });
  return ev;
}

std::array<double, 9> characteristic_polynomial(const Matrix8& m) {
  // Faddeev-LeVerrier recurrence on traces; exact in rational arithmetic.
  std::array<double, 9> coeffs{};
  coeffs[8] = 1.0;
  Matrix8 n = Matrix8::Identity();
  for (int k = 1; k <= 8; ++k) {
    const Matrix8 mk = m * n;
    coeffs[8 - k] = -mk.trace() / static_cast<double>(k);
    n = mk + coeffs[8 - k] * Matrix8::Identity();
  }
  return coeffs;
}

RouthVerdict routh_hurwitz(std::span<const double> coeffs) {
  const int n = static_cast<int>(coeffs.size()) - 1;
  if (n < 1 || coeffs[n] <= 0.0) return RouthVerdict::Degenerate;

  double scale = 0.0;
  for (double c : coeffs) scale = std::max(scale, std::abs(c));
  const double eps = kRouthPivotEpsilon * std::max(1.0, scale);

  const int width = n / 2 + 1;
  std::vector<double> row0(width, 0.0), row1(width, 0.0);
  for (int j = 0; j < width; ++j) {
    const int k0 = n - 2 * j;
    const int k1 = n - 1 - 2 * j;
    row0[j] = (k0 >= 0) ? coeffs[k0] : 0.0;
    row1[j] = (k1 >= 0) ? coeffs[k1] : 0.0;
  }

  int sign_changes = 0;
  double prev = row0[0];
  for (int i = 1; i <= n; ++i) {
    const double pivot = row1[0];
    if (std::abs(pivot) <= eps) return RouthVerdict::Degenerate;
    if (prev * pivot < 0.0) ++sign_changes;
    prev = pivot;
    if (i == n) break;
    std::vector<double> next(width, 0.0);
    for (int j = 0; j + 1 < width; ++j) {
      next[j] = (pivot * row0[j + 1] - row0[0] * row1[j + 1]) / pivot;
    }
    row0 = row1;
    row1 = next;
  }
  return sign_changes == 0 ? RouthVerdict::Stable : RouthVerdict::Unstable;
}

StabilityReport is_stable(const Matrix8& m) {
  StabilityReport rep;
  rep.eigenvalues = eigenvalues(m);
  rep.margin = rep.eigenvalues[0].real();
  rep.stable = rep.margin < -kStabilityEpsilon;

  const auto poly = characteristic_polynomial(m);
  const RouthVerdict verdict = routh_hurwitz(poly);
  rep.routh_available = verdict != RouthVerdict::Degenerate;
  if (rep.routh_available) {
    rep.routh_stable = verdict == RouthVerdict::Stable;
    rep.routh_agrees = rep.routh_stable == rep.stable;
  }
  return rep;
}

}  // namespace opamech
