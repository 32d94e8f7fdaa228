#include "opamech/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace opamech {

double AxisSpec::value(int i) const {
  if (i <= 0) return start;
  if (i >= count - 1) return stop;
  return start + (stop - start) * (static_cast<double>(i) / (count - 1));
}

std::size_t SweepResult::cell_count() const { return cells.size(); }

const PointRecord& SweepResult::at(int i, int j) const {
  const int inner = axes.size() == 2 ? axes[1].count : 1;
  return cells.at(static_cast<std::size_t>(i) * inner + j);
}

PointRecord evaluate_point(const PhysicalParams& params, NegativityConvention convention) {
  PointRecord rec;
  try {
    const PhysicalParams p = validate(params);

    SteadyState ss;
    if (p.detuning_mode == DetuningMode::EffectiveDelta) {
      ss = steady_state_given_delta(p);
    } else {
      const auto branches = steady_state_given_delta0(p);
      const SteadyStateBranch* pick = nullptr;
      for (const auto& br : branches) {
        if (br.stable) { pick = &br; break; }
      }
      if (pick == nullptr) pick = &branches.front();
      ss = pick->ss;
    }
    rec.a_s_abs = std::abs(ss.a_s);

    const DriftMatrix m = build_drift(p, ss);
    const StabilityReport rep = is_stable(m.m);
    rec.stable = rep.stable;
    rec.margin = rep.margin;
    if (!rep.stable) return rec;

    const CovarianceMatrix v = solve_lyapunov(m, build_diffusion(p));
    const EntanglementResult ent = log_negativity(reduce_mechanical(v), convention);
    rec.eta_minus = ent.eta_minus;
    rec.e_n = ent.e_n;
  } catch (const Error& e) {
    rec.error = e.what();
  }
  return rec;
}

SweepResult sweep(const PhysicalParams& base, std::span<const AxisSpec> axes,
                  NegativityConvention convention, int threads) {
  if (axes.empty() || axes.size() > 2) {
    throw ConfigError("sweep requires one or two axes");
  }
  for (const AxisSpec& ax : axes) {
    const auto& names = sweepable_params();
    if (std::find(names.begin(), names.end(), ax.param) == names.end()) {
      throw ConfigError("axis parameter '" + ax.param + "' is not sweepable");
    }
    if (ax.count < 2) throw ConfigError("axis '" + ax.param + "' needs count >= 2");
    if (!(ax.start != ax.stop)) {
      throw ConfigError("axis '" + ax.param + "' needs start != stop");
    }
  }
  if (axes.size() == 2 && axes[0].param == axes[1].param) {
    throw ConfigError("sweep axes must reference distinct parameters");
  }

  SweepResult res;
  res.axes.assign(axes.begin(), axes.end());
  res.base = base;
  const int n1 = axes[0].count;
  const int n2 = axes.size() == 2 ? axes[1].count : 1;
  const std::size_t total = static_cast<std::size_t>(n1) * n2;
  res.cells.resize(total);

  auto run_cell = [&](std::size_t idx) {
    PhysicalParams p = base;
    const int i = static_cast<int>(idx) / n2;
    const int j = static_cast<int>(idx) % n2;
    set_param(p, axes[0].param, axes[0].value(i));
    if (axes.size() == 2) set_param(p, axes[1].param, axes[1].value(j));
    res.cells[idx] = evaluate_point(p, convention);
  };

  const int workers = std::max(1, std::min<int>(threads, static_cast<int>(total)));
  if (workers == 1) {
    for (std::size_t idx = 0; idx < total; ++idx) run_cell(idx);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t idx = next.fetch_add(1); idx < total; idx = next.fetch_add(1)) {
          run_cell(idx);
        }
      });
    }
    for (auto& th : pool) th.join();
  }
  return res;
}

}  // namespace opamech
