#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "commands.hpp"

namespace su11::cli {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 500.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 30.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;

// Round step of the form {1, 2, 5} x 10^k giving about `target` intervals.
double nice_step(double range, int target) {
  const double raw = range / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    if (m * mag >= raw) return m * mag;
  }
  return 10.0 * mag;
}

}  // namespace

std::string render_density_svg(const SpectralTable& table) {
  if (table.rows.empty()) throw ConfigError("plot: table has no data rows");
  const double x0 = table.rows.front().x;
  const double x1 = table.rows.back().x;
  const bool log_x = x0 > 0.0 && x1 / x0 >= 100.0;
  double y_max = 0.0;
  for (const SpectralRow& r : table.rows) y_max = std::max(y_max, r.f_quad);
  if (!(y_max > 0.0)) y_max = 1.0;
  const double y_step = nice_step(y_max, 5);
  const double y_top = std::ceil(y_max / y_step) * y_step;

  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  const double span = x1 > x0 ? x1 - x0 : 1.0;
  auto px = [&](double x) {
    const double f = log_x ? (std::log10(x) - std::log10(x0)) / (std::log10(x1) - std::log10(x0)) : (x - x0) / span;
    return kLeft + f * pw;
  };
  auto py = [&](double y) { return kTop + (1.0 - y / y_top) * ph; };

  std::string s;
  s += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0:.0f}\" height=\"{1:.0f}\" viewBox=\"0 0 {0:.0f} {1:.0f}\">\n",
      kWidth, kHeight);
  s += fmt::format("<rect x=\"0\" y=\"0\" width=\"{:.0f}\" height=\"{:.0f}\" fill=\"white\"/>\n", kWidth, kHeight);
  s += "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"black\">\n";
  s += fmt::format("<text x=\"{:.1f}\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">Density of omega</text>\n",
                   kLeft + 0.5 * pw);
  // Axes.
  s += fmt::format("<line x1=\"{0:.1f}\" y1=\"{1:.1f}\" x2=\"{2:.1f}\" y2=\"{1:.1f}\" stroke=\"black\"/>\n", kLeft,
                   kTop + ph, kLeft + pw);
  s += fmt::format("<line x1=\"{0:.1f}\" y1=\"{1:.1f}\" x2=\"{0:.1f}\" y2=\"{2:.1f}\" stroke=\"black\"/>\n", kLeft, kTop,
                   kTop + ph);
  // x ticks.
  std::vector<double> xt;
  if (log_x) {
    for (double k = std::ceil(std::log10(x0) - 1e-12); k <= std::floor(std::log10(x1) + 1e-12); k += 1.0) {
      xt.push_back(std::pow(10.0, k));
    }
  } else {
    const double step = nice_step(span, 6);
    for (double v = std::ceil(x0 / step) * step; v <= x1 + 1e-9 * step; v += step) xt.push_back(v);
  }
  for (double v : xt) {
    const double x = px(v);
    s += fmt::format("<line x1=\"{0:.2f}\" y1=\"{1:.1f}\" x2=\"{0:.2f}\" y2=\"{2:.1f}\" stroke=\"black\"/>\n", x,
                     kTop + ph, kTop + ph + 5.0);
    s += fmt::format("<text x=\"{:.2f}\" y=\"{:.1f}\" text-anchor=\"middle\">{:g}</text>\n", x, kTop + ph + 20.0, v);
  }
  // y ticks.
  for (int i = 0; i * y_step <= y_top * (1.0 + 1e-12); ++i) {
    const double v = i * y_step;
    const double y = py(v);
    s += fmt::format("<line x1=\"{0:.1f}\" y1=\"{1:.2f}\" x2=\"{2:.1f}\" y2=\"{1:.2f}\" stroke=\"black\"/>\n",
                     kLeft - 5.0, y, kLeft);
    s += fmt::format("<text x=\"{:.1f}\" y=\"{:.2f}\" text-anchor=\"end\">{:.6g}</text>\n", kLeft - 8.0, y + 4.0, v);
  }
  s += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"middle\">{}</text>\n", kLeft + 0.5 * pw,
                   kHeight - 15.0, log_x ? "omega (log scale)" : "omega");
  s += fmt::format("<text x=\"18\" y=\"{0:.1f}\" text-anchor=\"middle\" transform=\"rotate(-90 18 {0:.1f})\">f_quad</text>\n",
                   kTop + 0.5 * ph);
  s += "</g>\n";
  s += "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    s += fmt::format("{}{:.3f},{:.3f}", i ? " " : "", px(table.rows[i].x), py(std::max(0.0, table.rows[i].f_quad)));
  }
  s += "\"/>\n</svg>\n";
  return s;
}

}  // namespace su11::cli
