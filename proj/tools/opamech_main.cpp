#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <limits>
#include <map>
#include <string>

#include "opamech/config.hpp"
#include "opamech/dynamics.hpp"
#include "opamech/lyapunov.hpp"
#include "opamech/output.hpp"
#include "opamech/stability.hpp"
#include "opamech/sweep.hpp"

namespace {

using namespace opamech;

constexpr int kExitOk = 0;
constexpr int kExitValidationFailure = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitNumericalError = 3;

struct CliInputs {
  std::string config_path;
  std::map<std::string, std::string> overrides;
};

// Every config key is also a command-line flag; flags win over the file.
void register_common(CLI::App* cmd, CliInputs& in) {
  cmd->add_option("--config", in.config_path, "flat key = value config file");
  static const char* keys[] = {"kappa",    "gamma_m",   "g",          "lambda_hop",
                               "drive_E",  "opa_gain",  "opa_phase",  "delta_eff",
                               "delta0",   "n_a",       "n_m",        "axis1_param",
                               "axis1_start", "axis1_stop", "axis1_count", "axis2_param",
                               "axis2_start", "axis2_stop", "axis2_count", "threads"};
  for (const char* key : keys) {
    cmd->add_option_function<std::string>(
        std::string("--") + key,
        [&in, key](const std::string& v) { in.overrides[key] = v; });
  }
  cmd->add_option_function<std::string>(
      "--convention", [&in](const std::string& v) { in.overrides["convention"] = v; },
      "e_n convention: ln2eta (default) or lneta");
  cmd->add_option_function<std::string>(
      "--out", [&in](const std::string& v) { in.overrides["out"] = v; }, "CSV output path");
  cmd->add_option_function<std::string>(
      "--svg", [&in](const std::string& v) { in.overrides["svg"] = v; },
      "SVG heatmap output path");
}

RunConfig load_config(const CliInputs& in) {
  std::map<std::string, std::string> kv;
  if (!in.config_path.empty()) kv = parse_config_file(in.config_path);
  for (const auto& [k, v] : in.overrides) kv[k] = v;
  return assemble_config(kv);
}

void print_kv(const char* key, double value) {
  std::printf("%s=%.12g\n", key, value);
}

int cmd_point(const RunConfig& cfg) {
  const PointRecord rec = evaluate_point(cfg.params, cfg.convention);
  if (!rec.ok()) {
    std::fprintf(stderr, "error: %s\n", rec.error.c_str());
    return kExitNumericalError;
  }
  std::printf("stable=%s\n", *rec.stable ? "true" : "false");
  print_kv("margin", *rec.margin);
  if (rec.eta_minus) print_kv("eta_minus", *rec.eta_minus);
  if (rec.e_n) print_kv("e_n", *rec.e_n);
  print_kv("a_s_abs", *rec.a_s_abs);
  return kExitOk;
}

int cmd_sweep(const RunConfig& cfg) {
  if (cfg.axes.empty()) {
    throw ConfigError("sweep requires axis1_param/_start/_stop/_count");
  }
  if (cfg.out_csv.empty()) {
    throw ConfigError("sweep requires an output CSV path ('out' key or --out)");
  }
  const SweepResult res = sweep(cfg.params, cfg.axes, cfg.convention, cfg.threads);
  write_csv(res, cfg.out_csv);
  if (!cfg.out_svg.empty()) write_svg(res, cfg.out_svg);
  return kExitOk;
}

// Independent cross-checks of the pipeline at the configured point.
int cmd_validate(const RunConfig& cfg) {
  bool all_ok = true;
  auto report = [&all_ok](const char* name, bool ok, const std::string& detail) {
    std::printf("%-22s %s  %s\n", name, ok ? "PASS" : "FAIL", detail.c_str());
    if (!ok) all_ok = false;
  };
  auto skip = [](const char* name, const std::string& why) {
    std::printf("%-22s SKIP  %s\n", name, why.c_str());
  };
  char detail[160];

  const PhysicalParams p = cfg.params;
  SteadyState ss;
  if (p.detuning_mode == DetuningMode::EffectiveDelta) {
    ss = steady_state_given_delta(p);
  } else {
    const auto branches = steady_state_given_delta0(p);
    ss = branches.front().ss;
    for (const auto& br : branches) {
      if (br.stable) { ss = br.ss; break; }
    }
  }

  // Fixed-point residual of the mean-field flow.
  const Vector8 fp = steady_state_vector(ss);
  const Vector8 res = mean_field_rhs(p, fp);
  double term_scale = std::max(1.0, std::abs(p.drive_E));
  term_scale = std::max(term_scale, (std::abs(ss.delta0) + p.kappa + p.lambda_hop +
                                     2.0 * p.opa_gain) * std::abs(ss.a_s));
  const double rhs_resid = res.cwiseAbs().maxCoeff();
  std::snprintf(detail, sizeof(detail), "|rhs| = %.3e (bound %.3e)", rhs_resid,
                1e-9 * term_scale);
  report("fixed_point_residual", rhs_resid <= 1e-9 * term_scale, detail);

  // Drift matrix vs finite-difference Jacobian of the nonlinear flow.
  const DriftMatrix m = build_drift(p, ss);
  const Matrix8 jac = mean_field_jacobian(p, fp);
  const double jac_err = (jac - m.m).cwiseAbs().maxCoeff();
  std::snprintf(detail, sizeof(detail), "max |J - M| = %.3e", jac_err);
  report("jacobian_vs_drift", jac_err <= 1e-5, detail);

  const StabilityReport rep = is_stable(m.m);
  std::snprintf(detail, sizeof(detail), "stable=%s margin=%.6e routh=%s",
                rep.stable ? "true" : "false", rep.margin,
                !rep.routh_available ? "degenerate" : (rep.routh_agrees ? "agrees" : "disagrees"));
  report("stability_crosscheck", !rep.routh_available || rep.routh_agrees, detail);

  if (rep.stable) {
    const DiffusionMatrix d = build_diffusion(p);
    const CovarianceMatrix v = solve_lyapunov(m, d);
    const double resid = (m.m * v.v + v.v * m.m.transpose() + d.d).cwiseAbs().maxCoeff();
    const double bound = 1e-8 * std::max(1.0, d.d.cwiseAbs().maxCoeff());
    std::snprintf(detail, sizeof(detail), "residual = %.3e (bound %.3e)", resid, bound);
    report("lyapunov_residual", resid <= bound, detail);

    const auto nu = symplectic_eigenvalues(v);
    std::snprintf(detail, sizeof(detail), "min nu = %.9f", nu[0]);
    report("symplectic_physical", nu[0] >= 0.5 - 1e-8, detail);

    // Mean-field contraction toward the fixed point.
    const double rho = std::abs(rep.eigenvalues[0]);
    const double dt = std::min(0.2 / std::max(1.0, rho), 5e-3);
    const double horizon = std::min(5.0 / std::max(1e-6, -rep.margin), 2e4);
    Vector8 init = fp * 1.01;
    const Vector8 endst = mean_field_settle(p, init, horizon, dt);
    const double d0 = (init - fp).norm();
    const double d1 = (endst - fp).norm();
    std::snprintf(detail, sizeof(detail), "|delta| %.3e -> %.3e over t = %.0f", d0, d1, horizon);
    report("mean_field_contracts", d1 < 0.5 * d0, detail);
  } else {
    skip("lyapunov_residual", "point is unstable");
    skip("symplectic_physical", "point is unstable");
    // The flow should leave the neighborhood of the (unstable) fixed point.
    const double rho = std::abs(rep.eigenvalues[0]);
    const double dt = std::min(0.2 / std::max(1.0, rho), 5e-3);
    const double horizon = std::min(50.0 / std::max(1e-9, rep.margin), 2e4);
    Vector8 init = fp + Vector8::Constant(1e-6 * std::max(1.0, fp.norm()));
    bool diverged = false;
    double growth = 0.0;
    try {
      const Vector8 endst = mean_field_settle(p, init, horizon, dt);
      growth = (endst - fp).norm() / (init - fp).norm();
      diverged = growth > 10.0;
    } catch (const NonFinite&) {
      diverged = true;
      growth = std::numeric_limits<double>::infinity();
    }
    std::snprintf(detail, sizeof(detail), "growth factor %.3e over t = %.0f", growth, horizon);
    report("mean_field_diverges", diverged, detail);
  }

  return all_ok ? kExitOk : kExitValidationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"steady-state entanglement of two coupled optomechanical cavities with "
               "intracavity parametric amplifiers"};
  app.require_subcommand(1);

  CliInputs in_point, in_sweep, in_validate;
  CLI::App* sub_point = app.add_subcommand("point", "evaluate the pipeline at one parameter point");
  CLI::App* sub_sweep = app.add_subcommand("sweep", "evaluate over a 1-D or 2-D grid, write CSV/SVG");
  CLI::App* sub_validate = app.add_subcommand("validate", "run the oracle cross-checks at one point");
  register_common(sub_point, in_point);
  register_common(sub_sweep, in_sweep);
  register_common(sub_validate, in_validate);

  CLI11_PARSE(app, argc, argv);

  try {
    if (sub_point->parsed()) return cmd_point(load_config(in_point));
    if (sub_sweep->parsed()) return cmd_sweep(load_config(in_sweep));
    return cmd_validate(load_config(in_validate));
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfigError;
  } catch (const InvalidParam& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfigError;
  } catch (const Error& e) {
    std::fprintf(stderr, "numerical error: %s\n", e.what());
    return kExitNumericalError;
  }
}
