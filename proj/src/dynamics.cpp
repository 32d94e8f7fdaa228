#include "opamech/dynamics.hpp"

#include <cmath>
#include <complex>

namespace opamech {

namespace {

// Bare detuning governing the mean-field flow. Params in EffectiveDelta mode
// imply it through the operating point of the given Delta.
double resolve_delta0(const PhysicalParams& p) {
  if (p.detuning_mode == DetuningMode::BareDelta0) return p.detuning;
  return steady_state_given_delta(p).delta0;
}

// Flow in amplitude coordinates (q1, p1, q2, p2, Re a1, Im a1, Re a2, Im a2).
Vector8 rhs(const PhysicalParams& p, double delta0, const Vector8& s) {
  using cplx = std::complex<double>;
  const cplx a1(s[4], s[5]);
  const cplx a2(s[6], s[7]);
  const cplx opa = 2.0 * p.opa_gain * std::exp(cplx(0.0, p.opa_phase));
  const cplx hop(0.0, p.lambda_hop);
  const cplx damp(p.kappa, delta0);

  Vector8 d;
  d[0] = s[1];
  d[1] = -s[0] - p.gamma_m * s[1] + p.g * std::norm(a1);
  d[2] = s[3];
  d[3] = -s[2] - p.gamma_m * s[3] + p.g * std::norm(a2);
  const cplx da1 = -damp * a1 + cplx(0.0, p.g * s[0]) * a1 + p.drive_E +
                   opa * std::conj(a1) - hop * a2;
  const cplx da2 = -damp * a2 + cplx(0.0, p.g * s[2]) * a2 + p.drive_E +
                   opa * std::conj(a2) - hop * a1;
  d[4] = da1.real();
  d[5] = da1.imag();
  d[6] = da2.real();
  d[7] = da2.imag();
  return d;
}

Vector8 rk4_step(const PhysicalParams& p, double delta0, const Vector8& s, double dt) {
  const Vector8 k1 = rhs(p, delta0, s);
  const Vector8 k2 = rhs(p, delta0, s + 0.5 * dt * k1);
  const Vector8 k3 = rhs(p, delta0, s + 0.5 * dt * k2);
  const Vector8 k4 = rhs(p, delta0, s + dt * k3);
  return s + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

long step_count(double t_max, double dt) {
  if (!(dt > 0.0)) throw InvalidParam("dt", dt, "> 0");
  if (!(t_max >= dt)) throw InvalidParam("t_max", t_max, ">= dt");
  return std::max<long>(1, std::lround(t_max / dt));
}

}  // namespace

DriftMatrix build_drift(const PhysicalParams& params, const SteadyState& ss) {
  const PhysicalParams p = validate(params);
  const double gx = ss.G.real();
  const double gy = ss.G.imag();
  const double delta = ss.delta_eff;
  const double c = 2.0 * p.opa_gain * std::cos(p.opa_phase);
  const double s = 2.0 * p.opa_gain * std::sin(p.opa_phase);

  Matrix8 m = Matrix8::Zero();
  // mechanical oscillators with damping (omega_m = 1)
  for (int b = 0; b < 2; ++b) {
    const int q = 2 * b, pp = 2 * b + 1;
    m(q, pp) = 1.0;
    m(pp, q) = -1.0;
    m(pp, pp) = -p.gamma_m;
  }
  // radiation-pressure rows and back-action columns
  m(1, 4) = gx; m(1, 5) = gy;
  m(3, 6) = gx; m(3, 7) = gy;
  m(4, 0) = -gy; m(5, 0) = gx;
  m(6, 2) = -gy; m(7, 2) = gx;
  // cavity block with OPA and photon hopping
  for (int b = 0; b < 2; ++b) {
    const int x = 4 + 2 * b, y = 5 + 2 * b;
    m(x, x) = -p.kappa + c;
    m(x, y) = delta + s;
    m(y, x) = -delta + s;
    m(y, y) = -p.kappa - c;
  }
  m(4, 7) = p.lambda_hop;
  m(5, 6) = -p.lambda_hop;
  m(6, 5) = p.lambda_hop;
  m(7, 4) = -p.lambda_hop;
  return DriftMatrix{m};
}

DiffusionMatrix build_diffusion(const PhysicalParams& params) {
  const PhysicalParams p = validate(params);
  const double mech = p.gamma_m * (2.0 * p.n_m + 1.0);
  const double opt = p.kappa * (2.0 * p.n_a + 1.0);
  Matrix8 d = Matrix8::Zero();
  d(1, 1) = mech;
  d(3, 3) = mech;
  for (int i = 4; i < 8; ++i) d(i, i) = opt;
  return DiffusionMatrix{d};
}

Vector8 mean_field_rhs(const PhysicalParams& params, const Vector8& state) {
  const PhysicalParams p = validate(params);
  return rhs(p, resolve_delta0(p), state);
}

Trajectory mean_field_trajectory(const PhysicalParams& params, const Vector8& init,
                                 double t_max, double dt, int sample_stride) {
  const PhysicalParams p = validate(params);
  const double delta0 = resolve_delta0(p);
  const long n = step_count(t_max, dt);
  const long stride = std::max(1, sample_stride);

  Trajectory traj;
  traj.t.reserve(static_cast<std::size_t>(n / stride) + 2);
  traj.state.reserve(traj.t.capacity());
  Vector8 s = init;
  traj.t.push_back(0.0);
  traj.state.push_back(s);
  for (long i = 1; i <= n; ++i) {
    s = rk4_step(p, delta0, s, dt);
    if (!s.allFinite()) {
      throw NonFinite("mean-field state overflowed at t = " + std::to_string(i * dt));
    }
    if (i % stride == 0 || i == n) {
      traj.t.push_back(i * dt);
      traj.state.push_back(s);
    }
  }
  return traj;
}

Vector8 mean_field_settle(const PhysicalParams& params, const Vector8& init,
                          double t_max, double dt) {
  const PhysicalParams p = validate(params);
  const double delta0 = resolve_delta0(p);
  const long n = step_count(t_max, dt);
  Vector8 s = init;
  for (long i = 1; i <= n; ++i) {
    s = rk4_step(p, delta0, s, dt);
    if (!s.allFinite()) {
      throw NonFinite("mean-field state overflowed at t = " + std::to_string(i * dt));
    }
  }
  return s;
}

double default_mean_field_dt(const PhysicalParams& params) {
  const PhysicalParams p = validate(params);
  double g_abs = 0.0;
  if (p.detuning_mode == DetuningMode::EffectiveDelta) {
    try {
      g_abs = std::abs(steady_state_given_delta(p).G);
    } catch (const DenominatorSingular&) {
      g_abs = 0.0;
    }
  }
  const double rate = std::max({1.0, g_abs, p.lambda_hop, std::abs(p.detuning),
                                2.0 * p.opa_gain});
  return 1e-3 / rate;
}

Matrix8 mean_field_jacobian(const PhysicalParams& params, const Vector8& state,
                            double rel_step) {
  const PhysicalParams p = validate(params);
  const double delta0 = resolve_delta0(p);
  const double rt2 = std::sqrt(2.0);

  // Work in the quadrature basis of the drift matrix: optical coordinates are
  // x = sqrt(2) Re a, y = sqrt(2) Im a.
  Vector8 xi = state;
  for (int i = 4; i < 8; ++i) xi[i] *= rt2;
  auto flow_quad = [&](const Vector8& q) {
    Vector8 z = q;
    for (int i = 4; i < 8; ++i) z[i] /= rt2;
    Vector8 f = rhs(p, delta0, z);
    for (int i = 4; i < 8; ++i) f[i] *= rt2;
    return f;
  };

  Matrix8 jac;
  for (int j = 0; j < 8; ++j) {
    const double h = rel_step * std::max(1.0, std::abs(xi[j]));
    Vector8 plus = xi, minus = xi;
    plus[j] += h;
    minus[j] -= h;
    jac.col(j) = (flow_quad(plus) - flow_quad(minus)) / (2.0 * h);
  }
  return jac;
}

Vector8 steady_state_vector(const SteadyState& ss) {
  Vector8 s;
  s << ss.q_s, ss.p_s, ss.q_s, ss.p_s,
       ss.a_s.real(), ss.a_s.imag(), ss.a_s.real(), ss.a_s.imag();
  return s;
}

}  // namespace opamech
