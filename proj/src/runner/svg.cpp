#include "qdghz/runner/svg.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "qdghz/errors.hpp"
#include "qdghz/runner/csv.hpp"

namespace qdghz {

namespace {

constexpr double kWidth = 960.0;
constexpr double kHeight = 600.0;
constexpr double kLeft = 90.0;
constexpr double kRight = 930.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 530.0;

struct Style {
  const char* colour;
  const char* dash;  // empty for solid
};

// Solid, dotted, dashed, dot-dashed: the order the curves are drawn in the figures.
constexpr std::array<Style, 4> kStyles = {{
    {"#1f3a93", ""},
    {"#c0392b", "2,4"},
    {"#1e8449", "10,5"},
    {"#7d3c98", "10,4,2,4"},
}};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

double nice_step(double span, int target_ticks) {
  const double raw = span / target_ticks;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {1.0, 2.0, 5.0, 10.0})
    if (m * mag >= raw) return m * mag;
  return 10.0 * mag;
}

std::string legend_label(const Trajectory& traj) {
  const auto& p = traj.meta.params;
  if (!traj.meta.member) {
    return fmt::format("η = {}, Ω = {} fs⁻¹, Δ = {} fs⁻¹", format_number(p.eta), format_number(p.omega_rabi),
                       format_number(p.delta));
  }
  const auto value = format_number(traj.meta.member->value);
  switch (traj.meta.member->axis) {
    case SweepAxis::omega_rabi: return "Ω = " + value + " fs⁻¹";
    case SweepAxis::delta: return "Δ = " + value + " fs⁻¹";
    case SweepAxis::eta: return "η = " + value + " fs⁻¹";
    case SweepAxis::phi: return "φ = " + value + " rad";
    case SweepAxis::tau: return "τ = " + value + " rad";
  }
  return value;
}

}  // namespace

std::string render_svg(std::span<const Trajectory> trajs, const std::string& title) {
  if (trajs.empty()) throw std::invalid_argument("render_svg: no trajectories");
  double t_min = INFINITY, t_max = -INFINITY;
  for (const auto& traj : trajs) {
    if (traj.rows.empty()) throw std::invalid_argument("render_svg: empty trajectory");
    t_min = std::min(t_min, traj.rows.front().t);
    t_max = std::max(t_max, traj.rows.back().t);
  }
  if (!(t_max > t_min)) t_max = t_min + 1.0;

  const auto x_of = [&](double t) { return kLeft + (t - t_min) / (t_max - t_min) * (kRight - kLeft); };
  const auto y_of = [&](double p) { return kBottom - p * (kBottom - kTop); };

  std::string svg;
  svg += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {} {}\" width=\"{}\" height=\"{}\" "
      "font-family=\"sans-serif\" font-size=\"14\">\n",
      kWidth, kHeight, kWidth, kHeight);
  svg += "<rect x=\"0\" y=\"0\" width=\"960\" height=\"600\" fill=\"white\"/>\n";
  if (!title.empty()) {
    svg += fmt::format("<text x=\"{}\" y=\"30\" text-anchor=\"middle\" font-size=\"16\">{}</text>\n",
                       (kLeft + kRight) / 2.0, escape(title));
  }

  // Grid and ticks. The y axis is a probability, fixed to [0, 1].
  svg += "<g stroke=\"#dddddd\" stroke-width=\"1\">\n";
  for (int i = 0; i <= 5; ++i) {
    const double y = y_of(i / 5.0);
    svg += fmt::format("<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\"/>\n", kLeft, y, kRight, y);
  }
  const double step = nice_step(t_max - t_min, 8);
  const double first_tick = std::ceil(t_min / step) * step;
  for (double t = first_tick; t <= t_max + 1e-9 * step; t += step) {
    const double x = x_of(t);
    svg += fmt::format("<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\"/>\n", x, kTop, x, kBottom);
  }
  svg += "</g>\n";

  svg += fmt::format(
      "<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" fill=\"none\" stroke=\"black\"/>\n", kLeft,
      kTop, kRight - kLeft, kBottom - kTop);
  for (int i = 0; i <= 5; ++i) {
    svg += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"end\">{}</text>\n", kLeft - 8.0,
                       y_of(i / 5.0) + 5.0, format_number(i / 5.0));
  }
  for (double t = first_tick; t <= t_max + 1e-9 * step; t += step) {
    svg += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\">{}</text>\n", x_of(t),
                       kBottom + 20.0, format_number(std::abs(t) < 1e-9 * step ? 0.0 : t));
  }
  svg += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\">t (fs)</text>\n",
                     (kLeft + kRight) / 2.0, kBottom + 50.0);
  svg += fmt::format(
      "<text x=\"25\" y=\"{:.2f}\" text-anchor=\"middle\" transform=\"rotate(-90 25 {:.2f})\">℘(GHZ)</text>\n",
      (kTop + kBottom) / 2.0, (kTop + kBottom) / 2.0);

  for (std::size_t i = 0; i < trajs.size(); ++i) {
    const auto& style = kStyles[i % kStyles.size()];
    svg += fmt::format("<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\"", style.colour);
    if (*style.dash) svg += fmt::format(" stroke-dasharray=\"{}\"", style.dash);
    svg += " points=\"";
    bool first = true;
    for (const auto& row : trajs[i].rows) {
      if (!first) svg += ' ';
      first = false;
      svg += fmt::format("{:.2f},{:.2f}", x_of(row.t), y_of(row.p_ghz));
    }
    svg += "\"/>\n";
  }

  // Legend, top right inside the frame.
  const double box_w = 250.0;
  const double box_h = 12.0 + 22.0 * static_cast<double>(trajs.size());
  const double bx = kRight - box_w - 10.0;
  const double by = kTop + 10.0;
  svg += fmt::format(
      "<g><rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" fill=\"white\" fill-opacity=\"0.9\" "
      "stroke=\"#888888\"/>\n",
      bx, by, box_w, box_h);
  for (std::size_t i = 0; i < trajs.size(); ++i) {
    const auto& style = kStyles[i % kStyles.size()];
    const double y = by + 18.0 + 22.0 * static_cast<double>(i);
    svg += fmt::format("<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"{}\" stroke-width=\"2\"",
                       bx + 10.0, y - 4.0, bx + 50.0, y - 4.0, style.colour);
    if (*style.dash) svg += fmt::format(" stroke-dasharray=\"{}\"", style.dash);
    svg += "/>\n";
    svg += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\">{}</text>\n", bx + 60.0, y, escape(legend_label(trajs[i])));
  }
  svg += "</g>\n</svg>\n";
  return svg;
}

void emit_svg(const std::filesystem::path& path, std::span<const Trajectory> trajs, const std::string& title) {
  const auto svg = render_svg(trajs, title);
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open " + path.string() + " for writing");
  file << svg;
  file.close();
  if (!file) throw IoError("failed writing " + path.string());
}

}  // namespace qdghz
