#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "opamech/entanglement.hpp"

namespace opamech {

/// One linear sweep axis over a named parameter.
struct AxisSpec {
  std::string param;
  double start = 0.0;
  double stop = 0.0;
  int count = 0;

  /// Grid value at index i; endpoints are hit exactly.
  double value(int i) const;
};

/// Outcome of the full pipeline at one parameter point. Unstable cells carry
/// margin (and amplitude) only; cells whose evaluation raised an error carry
/// whatever was computed before the failure plus the error message.
struct PointRecord {
  std::optional<bool> stable;
  std::optional<double> margin;
  std::optional<double> eta_minus;
  std::optional<double> e_n;
  std::optional<double> a_s_abs;
  std::string error;

  bool ok() const { return error.empty(); }
};

/// steady state -> drift/diffusion -> stability; if stable, Lyapunov ->
/// reduction -> negativity. Pipeline errors are recorded in the result,
/// never thrown. In BareDelta0 mode the lowest-|a_s|^2 stable branch is
/// evaluated (lowest-|a_s|^2 overall if none is stable).
PointRecord evaluate_point(const PhysicalParams& params,
                           NegativityConvention convention = NegativityConvention::LnTwoEta);

struct SweepResult {
  std::vector<AxisSpec> axes;      ///< 1 or 2 axes
  std::vector<PointRecord> cells;  ///< row-major, axis 1 outer
  PhysicalParams base;             ///< provenance snapshot

  std::size_t cell_count() const;
  const PointRecord& at(int i, int j = 0) const;
};

/// Evaluate the pipeline over a 1-D or 2-D grid. Cells are independent work
/// items; with threads > 1 they are evaluated concurrently and assembled by
/// cell index, so results are identical to a serial run. Throws InvalidParam
/// / ConfigError on malformed axes.
SweepResult sweep(const PhysicalParams& base, std::span<const AxisSpec> axes,
                  NegativityConvention convention = NegativityConvention::LnTwoEta,
                  int threads = 1);

}  // namespace opamech
