#include "opamech/steady_state.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "opamech/dynamics.hpp"
#include "opamech/stability.hpp"

namespace opamech {

namespace {

constexpr double kRootImagTol = 1e-7;      // companion-root realness filter
constexpr double kRootResidualTol = 1e-9;  // relative residual acceptance
constexpr int kNewtonBudget = 100;

std::complex<double> amplitude_at_delta(const PhysicalParams& p, double delta) {
  const double w = delta + p.lambda_hop;
  const double den = p.kappa * p.kappa + w * w - 4.0 * p.opa_gain * p.opa_gain;
  if (std::abs(den) <= kDenominatorEpsilon) {
    throw DenominatorSingular("steady-state denominator k^2 + (Delta+lambda)^2 - 4*Lambda^2 = " +
                              std::to_string(den) + " at Delta = " + std::to_string(delta));
  }
  const std::complex<double> numerator =
      std::complex<double>(p.kappa, -w) +
      2.0 * p.opa_gain * std::exp(std::complex<double>(0.0, p.opa_phase));
  return numerator * p.drive_E / den;
}

SteadyState assemble(const PhysicalParams& p, double delta) {
  SteadyState ss;
  ss.a_s = amplitude_at_delta(p, delta);
  ss.q_s = p.g * std::norm(ss.a_s);
  ss.p_s = 0.0;
  ss.delta_eff = delta;
  ss.delta0 = delta + p.g * ss.q_s;
  ss.G = std::sqrt(2.0) * p.g * ss.a_s;
  return ss;
}

// P(v) = v*(k^2 - 4L^2 + (A-v)^2)^2 - (gE)^2 * ((k + 2Lcos)^2 + (A - v - 2Lsin)^2),
// v = g^2*|a_s|^2, A = Delta0 + lambda. Monic quintic, ascending coefficients.
std::array<double, 6> fixed_point_polynomial(const PhysicalParams& p) {
  const double A = p.detuning + p.lambda_hop;
  const double L = p.opa_gain;
  const double c = std::cos(p.opa_phase);
  const double s = std::sin(p.opa_phase);
  const double d0 = p.kappa * p.kappa - 4.0 * L * L + A * A;
  const double d1 = -2.0 * A;
  // (d0 + d1 v + v^2)^2
  const double c0 = d0 * d0;
  const double c1 = 2.0 * d0 * d1;
  const double c2 = d1 * d1 + 2.0 * d0;
  const double c3 = 2.0 * d1;
  const double K = (p.g * p.drive_E) * (p.g * p.drive_E);
  const double kc = p.kappa + 2.0 * L * c;
  const double n0 = kc * kc + 4.0 * L * L * s * s + A * A - 4.0 * L * s * A;
  const double n1 = -2.0 * A + 4.0 * L * s;
  return {-K * n0, c0 - K * n1, c1 - K, c2, c3, 1.0};
}

double poly_eval(const std::array<double, 6>& c, double v) {
  double r = c[5];
  for (int k = 4; k >= 0; --k) r = r * v + c[k];
  return r;
}

double poly_deriv(const std::array<double, 6>& c, double v) {
  double r = 5.0 * c[5];
  for (int k = 4; k >= 1; --k) r = r * v + k * c[k];
  return r;
}

double poly_scale(const std::array<double, 6>& c, double v) {
  double s = 0.0, vp = 1.0;
  for (double ck : c) {
    s += std::abs(ck) * std::abs(vp);
    vp *= v;
  }
  return std::max(1.0, s);
}

}  // namespace

SteadyState steady_state_given_delta(const PhysicalParams& params) {
  const PhysicalParams p = validate(params);
  if (p.detuning_mode != DetuningMode::EffectiveDelta) {
    throw InvalidParam("detuning_mode", 1.0, "EffectiveDelta for steady_state_given_delta");
  }
  return assemble(p, p.detuning);
}

std::vector<SteadyStateBranch> steady_state_given_delta0(const PhysicalParams& params) {
  const PhysicalParams p = validate(params);
  if (p.detuning_mode != DetuningMode::BareDelta0) {
    throw InvalidParam("detuning_mode", 0.0, "BareDelta0 for steady_state_given_delta0");
  }
  const double delta0 = p.detuning;

  std::vector<double> roots_v;  // v = g^2 * u
  if (p.g == 0.0) {
    // No back-action: Delta = Delta0 exactly.
    roots_v.push_back(0.0);
  } else {
    const auto poly = fixed_point_polynomial(p);

    Eigen::Matrix<double, 5, 5> companion = Eigen::Matrix<double, 5, 5>::Zero();
    for (int i = 1; i < 5; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < 5; ++i) companion(i, 4) = -poly[i];
    Eigen::EigenSolver<Eigen::Matrix<double, 5, 5>> es(companion, false);
    if (es.info() != Eigen::Success) {
      throw RootFindFailure("companion-matrix eigensolve did not converge");
    }

    for (int i = 0; i < 5; ++i) {
      const std::complex<double> z = es.eigenvalues()[i];
      if (std::abs(z.imag()) > kRootImagTol * std::max(1.0, std::abs(z))) continue;
      // Newton refinement to 1e-12 relative.
      double v = z.real();
      for (int it = 0; it < kNewtonBudget; ++it) {
        const double f = poly_eval(poly, v);
        const double df = poly_deriv(poly, v);
        if (df == 0.0) break;
        const double step = f / df;
        v -= step;
        if (std::abs(step) <= 1e-12 * std::max(1.0, std::abs(v))) break;
      }
      // The residual separates true real roots from the real part of a
      // nearby complex pair, which stalls at the local extremum.
      if (std::abs(poly_eval(poly, v)) > kRootResidualTol * poly_scale(poly, v)) continue;
      if (v < 0.0) {
        if (v < -1e-10 * std::max(1.0, std::abs(delta0 + p.lambda_hop))) continue;
        v = 0.0;
      }
      roots_v.push_back(v);
    }
    std::sort(roots_v.begin(), roots_v.end());
    roots_v.erase(std::unique(roots_v.begin(), roots_v.end(),
                              [](double a, double b) {
                                return std::abs(a - b) <= 1e-8 * std::max(1.0, std::abs(b));
                              }),
                  roots_v.end());
  }

  std::vector<SteadyStateBranch> branches;
  for (double v : roots_v) {
    const double delta = delta0 - v;
    SteadyState ss;
    try {
      ss = assemble(p, delta);
    } catch (const DenominatorSingular&) {
      if (p.g == 0.0) throw;  // the unique branch is singular; nothing to return
      continue;               // cleared-denominator artifact root
    }
    if (p.g > 0.0) {
      const double u = v / (p.g * p.g);
      if (std::abs(std::norm(ss.a_s) - u) > 1e-6 * std::max(1.0, u)) {
        throw RootFindFailure("fixed-point root failed the self-consistency residual");
      }
    }
    SteadyStateBranch br;
    br.ss = ss;
    const StabilityReport rep = is_stable(build_drift(p, ss).m);
    br.stable = rep.stable;
    br.margin = rep.margin;
    branches.push_back(br);
  }

  if (branches.empty()) {
    throw NoRealRoot("no nonnegative real root solves the fixed-point equation at Delta0 = " +
                     std::to_string(delta0));
  }
  std::sort(branches.begin(), branches.end(), [](const auto& a, const auto& b) {
    return std::norm(a.ss.a_s) < std::norm(b.ss.a_s);
  });
  return branches;
}

}  // namespace opamech
