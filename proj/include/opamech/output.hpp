#pragma once

#include <string>

#include "opamech/sweep.hpp"

namespace opamech {

/// Shortest decimal representation that round-trips to the same double.
std::string format_shortest(double x);

/// CSV for a sweep: header `axis1[,axis2],stable,margin,eta_minus,e_n,a_s_abs`,
/// rows row-major (axis 1 outer). eta_minus/e_n are empty for unstable cells;
/// errored cells leave every unavailable field empty. Numbers use shortest
/// round-trip formatting, so re-parsing reproduces the grid bit-exactly.
std::string sweep_to_csv(const SweepResult& result);

/// Write CSV to a file; the partial file is removed if writing fails.
void write_csv(const SweepResult& result, const std::string& path);

/// Self-contained SVG heatmap of e_n over the grid (1-D sweeps render as a
/// single-row strip). Unstable/errored cells use one reserved color; the
/// linear color scale is annotated with its min/max.
std::string sweep_to_svg(const SweepResult& result);

void write_svg(const SweepResult& result, const std::string& path);

}  // namespace opamech
