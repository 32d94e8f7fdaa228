#pragma once

#include "opamech/lyapunov.hpp"

namespace opamech {

/// Reduced 4x4 covariance matrix of the two mechanical modes, partitioned as
/// [[A, C], [C^T, B]] with 2x2 blocks.
struct MechanicalCM {
  Eigen::Matrix2d a;
  Eigen::Matrix2d b;
  Eigen::Matrix2d c;

  Eigen::Matrix4d full() const;
};

/// Logarithmic-negativity convention. LnTwoEta (default) is
/// E_N = max[0, -ln(2 eta^-)], consistent with the separability threshold
/// eta^- < 1/2 at vacuum variance 1/2; LnEta is the literal
/// E_N = max[0, -ln eta^-] variant.
enum class NegativityConvention { LnTwoEta, LnEta };

struct EntanglementResult {
  double eta_minus = 0.0; ///< smallest partial-transpose symplectic eigenvalue
  double e_n = 0.0;       ///< logarithmic negativity
  bool entangled = false; ///< eta_minus < 1/2 - 1e-12
};

/// Leading 4x4 principal submatrix of V, split into the A/B/C blocks.
MechanicalCM reduce_mechanical(const CovarianceMatrix& v);

/// eta^- = sqrt[(Sigma - sqrt(Sigma^2 - 4 det Vm)) / 2] with
/// Sigma = det A + det B - 2 det C, and E_N per the chosen convention.
/// Discriminants negative beyond -1e-12 raise UnphysicalCM; tiny negatives
/// are clamped to zero.
EntanglementResult log_negativity(const MechanicalCM& vm,
                                  NegativityConvention convention = NegativityConvention::LnTwoEta);

}  // namespace opamech
