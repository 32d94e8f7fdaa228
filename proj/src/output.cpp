#include "opamech/output.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace opamech {

std::string format_shortest(double x) {
  std::array<char, 40> buf;
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), ptr);
}

namespace {

std::string opt_field(const std::optional<double>& v) {
  return v ? format_shortest(*v) : std::string{};
}

void write_file_or_cleanup(const std::string& text, const std::string& path) {
  {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (out) {
      out << text;
      if (out.good()) return;
    }
  }
  std::remove(path.c_str());
  throw Error("failed to write '" + path + "'");
}

// Five-stop viridis ramp; t in [0, 1].
std::array<int, 3> colormap(double t) {
  static constexpr double stops[5][3] = {
      {68, 1, 84}, {59, 82, 139}, {33, 145, 140}, {94, 201, 98}, {253, 231, 37}};
  t = std::clamp(t, 0.0, 1.0) * 4.0;
  const int lo = std::min(3, static_cast<int>(t));
  const double f = t - lo;
  std::array<int, 3> rgb;
  for (int c = 0; c < 3; ++c) {
    rgb[c] = static_cast<int>(std::lround(stops[lo][c] + f * (stops[lo + 1][c] - stops[lo][c])));
  }
  return rgb;
}

std::string rgb_str(const std::array<int, 3>& c) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "rgb(%d,%d,%d)", c[0], c[1], c[2]);
  return buf;
}

}  // namespace

std::string sweep_to_csv(const SweepResult& result) {
  const bool two_d = result.axes.size() == 2;
  std::ostringstream out;
  out << (two_d ? "axis1,axis2," : "axis1,") << "stable,margin,eta_minus,e_n,a_s_abs\n";
  const int n1 = result.axes[0].count;
  const int n2 = two_d ? result.axes[1].count : 1;
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n2; ++j) {
      const PointRecord& c = result.cells[static_cast<std::size_t>(i) * n2 + j];
      out << format_shortest(result.axes[0].value(i)) << ',';
      if (two_d) out << format_shortest(result.axes[1].value(j)) << ',';
      if (c.stable) out << (*c.stable ? "true" : "false");
      out << ',' << opt_field(c.margin) << ',' << opt_field(c.eta_minus) << ','
          << opt_field(c.e_n) << ',' << opt_field(c.a_s_abs) << '\n';
    }
  }
  return out.str();
}

void write_csv(const SweepResult& result, const std::string& path) {
  write_file_or_cleanup(sweep_to_csv(result), path);
}

std::string sweep_to_svg(const SweepResult& result) {
  const bool two_d = result.axes.size() == 2;
  const int n1 = result.axes[0].count;         // columns, axis 1 along x
  const int n2 = two_d ? result.axes[1].count : 1;  // rows, axis 2 along y

  double en_min = 0.0, en_max = 0.0;
  bool have_en = false;
  for (const auto& c : result.cells) {
    if (!c.e_n) continue;
    if (!have_en) { en_min = en_max = *c.e_n; have_en = true; }
    en_min = std::min(en_min, *c.e_n);
    en_max = std::max(en_max, *c.e_n);
  }
  const double span = (have_en && en_max > en_min) ? en_max - en_min : 1.0;

  const int cell = std::clamp(720 / std::max(n1, n2), 2, 32);
  const int margin_l = 12, margin_t = 12, legend_h = 56;
  const int width = margin_l * 2 + n1 * cell;
  const int height = margin_t + n2 * cell + legend_h;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\">\n";
  svg << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";

  const std::string unstable_color = "rgb(158,158,158)";
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n2; ++j) {
      const PointRecord& c = result.cells[static_cast<std::size_t>(i) * n2 + j];
      std::string fill = unstable_color;
      if (c.e_n) fill = rgb_str(colormap((*c.e_n - en_min) / span));
      const int x = margin_l + i * cell;
      const int y = margin_t + (n2 - 1 - j) * cell;  // axis 2 increases upward
      svg << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell << "\" height=\""
          << cell << "\" fill=\"" << fill << "\"/>\n";
    }
  }

  // Legend: linear color scale with min/max annotations.
  const int ly = margin_t + n2 * cell + 14;
  const int lw = std::max(120, width - 2 * margin_l);
  const int steps = 48;
  for (int s = 0; s < steps; ++s) {
    svg << "<rect x=\"" << margin_l + s * lw / steps << "\" y=\"" << ly << "\" width=\""
        << (lw + steps - 1) / steps << "\" height=\"10\" fill=\""
        << rgb_str(colormap(static_cast<double>(s) / (steps - 1))) << "\"/>\n";
  }
  char lo[32], hi[32];
  std::snprintf(lo, sizeof(lo), "%.4g", have_en ? en_min : 0.0);
  std::snprintf(hi, sizeof(hi), "%.4g", have_en ? en_max : 0.0);
  svg << "<text x=\"" << margin_l << "\" y=\"" << ly + 24
      << "\" font-family=\"sans-serif\" font-size=\"11\">e_n min " << lo << "</text>\n";
  svg << "<text x=\"" << margin_l + lw << "\" y=\"" << ly + 24
      << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">max " << hi
      << "</text>\n";
  svg << "<text x=\"" << margin_l << "\" y=\"" << ly + 38
      << "\" font-family=\"sans-serif\" font-size=\"11\">x: " << result.axes[0].param;
  if (two_d) svg << "  y: " << result.axes[1].param;
  svg << "  (gray = unstable)</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

void write_svg(const SweepResult& result, const std::string& path) {
  write_file_or_cleanup(sweep_to_svg(result), path);
}

}  // namespace opamech
