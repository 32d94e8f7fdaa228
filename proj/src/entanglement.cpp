#include "opamech/entanglement.hpp"

#include <cmath>

namespace opamech {

namespace {
constexpr double kClampTol = 1e-12;
constexpr double kThresholdTol = 1e-12;

double det2(const Eigen::Matrix2d& m) {
  return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}
}  // namespace

Eigen::Matrix4d MechanicalCM::full() const {
  Eigen::Matrix4d v;
  v.topLeftCorner<2, 2>() = a;
  v.topRightCorner<2, 2>() = c;
  v.bottomLeftCorner<2, 2>() = c.transpose();
  v.bottomRightCorner<2, 2>() = b;
  return v;
}

MechanicalCM reduce_mechanical(const CovarianceMatrix& v) {
  MechanicalCM vm;
  vm.a = v.v.block<2, 2>(0, 0);
  vm.b = v.v.block<2, 2>(2, 2);
  vm.c = v.v.block<2, 2>(0, 2);
  return vm;
}

EntanglementResult log_negativity(const MechanicalCM& vm, NegativityConvention convention) {
  const double det_a = det2(vm.a);
  const double det_b = det2(vm.b);
  const double det_c = det2(vm.c);
  const double det_vm = vm.full().determinant();
  if (det_vm < -kClampTol) {
    throw UnphysicalCM("det V_m = " + std::to_string(det_vm) + " is negative");
  }
  const double sigma = det_a + det_b - 2.0 * det_c;

  double disc = sigma * sigma - 4.0 * det_vm;
  if (disc < -kClampTol) {
    throw UnphysicalCM("Sigma^2 - 4 det V_m = " + std::to_string(disc) + " is negative");
  }
  disc = std::max(disc, 0.0);

  double inner = 0.5 * (sigma - std::sqrt(disc));
  if (inner < -kClampTol) {
    throw UnphysicalCM("partial-transpose eigenvalue argument is negative");
  }
  inner = std::max(inner, 0.0);
  const double eta = std::sqrt(inner);
  if (!(eta > 0.0)) {
    throw UnphysicalCM("eta_minus vanished; upstream covariance matrix is degenerate");
  }

  EntanglementResult res;
  res.eta_minus = eta;
  res.entangled = eta < 0.5 - kThresholdTol;
  if (convention == NegativityConvention::LnTwoEta) {
    // Separable states land at eta >= 1/2 up to roundoff; snap those to
    // exactly zero so e_n > 0 coincides with the entanglement verdict.
    res.e_n = res.entangled ? std::max(0.0, -std::log(2.0 * eta)) : 0.0;
  } else {
    res.e_n = std::max(0.0, -std::log(eta));
  }
  return res;
}

}  // namespace opamech
