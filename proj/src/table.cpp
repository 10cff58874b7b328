#include "su11/table.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>

#include "su11/spectral.hpp"

namespace su11 {

namespace {

double parse_number(std::string_view text, std::string_view what) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw std::invalid_argument(fmt::format("cannot parse {} '{}' as a number", what, text));
  }
  return v;
}

SpectralRow evaluate_row(double x, double tol) {
  const ScaleParams p = ScaleParams::from_omega(x);
  SpectralRow r;
  r.x = x;
  r.x_tilde = p.x_tilde;
  r.F_quad = cdf_quadrature(x, tol).value;
  r.F_paper_u = cdf_closed_paper_u(p.u);
  r.F_paper_prop = cdf_closed_paper_prop(p.x_tilde);
  r.F_derived = cdf_closed_derived(p.u);
  r.f_quad = pdf_quadrature(x);
  r.f_paper = pdf_closed_paper(p.x_tilde);
  return r;
}

}  // namespace

GridSpec GridSpec::parse(std::string_view text, bool log) {
  GridSpec g;
  g.log = log;
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
  if (c2 == std::string_view::npos || text.find(':', c2 + 1) != std::string_view::npos) {
    throw std::invalid_argument(fmt::format("grid '{}' is not of the form min:max:points", text));
  }
  g.min = parse_number(text.substr(0, c1), "grid min");
  g.max = parse_number(text.substr(c1 + 1, c2 - c1 - 1), "grid max");
  const double n = parse_number(text.substr(c2 + 1), "grid points");
  if (!(n >= 1.0) || n != std::floor(n) || n > 1e7) {
    throw std::invalid_argument(fmt::format("grid point count '{}' must be a positive integer", text.substr(c2 + 1)));
  }
  g.points = static_cast<std::size_t>(n);
  g.validate();
  return g;
}

void GridSpec::validate() const {
  if (points == 0) throw std::invalid_argument("grid needs at least one point");
  if (!(min > 0.0) || !std::isfinite(max)) throw std::invalid_argument("grid bounds must be positive and finite");
  if (points > 1 && !(max > min)) throw std::invalid_argument("grid max must exceed grid min");
  if (points == 1 && max != min) throw std::invalid_argument("a one-point grid needs min == max");
}

std::vector<double> GridSpec::values() const {
  validate();
  std::vector<double> xs(points);
  if (points == 1) {
    xs[0] = min;
    return xs;
  }
  const double n = static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) {
    const double f = static_cast<double>(i) / n;
    xs[i] = log ? std::exp(std::log(min) + f * (std::log(max) - std::log(min))) : min + f * (max - min);
  }
  xs.front() = min;
  xs.back() = max;
  return xs;
}

std::string format_double(double v) { return fmt::format("{:.17g}", v); }

void SpectralTable::write_csv(std::ostream& out) const {
  out << kHeader << '\n';
  for (const SpectralRow& r : rows) {
    out << fmt::format("{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g}\n", r.x, r.x_tilde, r.F_quad,
                       r.F_paper_u, r.F_paper_prop, r.F_derived, r.f_quad, r.f_paper);
  }
}

SpectralTable SpectralTable::read_csv(std::istream& in) {
  SpectralTable t;
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw std::invalid_argument("line 1: empty input, expected a header");
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kHeader) throw std::invalid_argument(fmt::format("line 1: unexpected header '{}'", line));
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    double v[8];
    std::size_t field = 0;
    std::size_t start = 0;
    try {
      while (true) {
        const auto comma = line.find(',', start);
        const std::string_view cell =
            std::string_view(line).substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (field >= 8) throw std::invalid_argument("too many fields");
        v[field++] = parse_number(cell, "field");
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      if (field != 8) throw std::invalid_argument(fmt::format("expected 8 fields, found {}", field));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(fmt::format("line {}: {}", line_no, e.what()));
    }
    if (!t.rows.empty() && !(v[0] > t.rows.back().x)) {
      throw std::invalid_argument(fmt::format("line {}: x values must be strictly increasing", line_no));
    }
    t.rows.push_back({v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]});
  }
  return t;
}

SpectralTable build_spectral_table(std::span<const double> xs, double tol, bool parallel) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!(xs[i] > 0.0) || !std::isfinite(xs[i])) throw std::domain_error("build_spectral_table: x must be positive");
    if (i > 0 && !(xs[i] > xs[i - 1])) throw std::domain_error("build_spectral_table: x must be strictly increasing");
  }
  SpectralTable t;
  t.rows.resize(xs.size());
  const auto n = static_cast<std::ptrdiff_t>(xs.size());
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t i = 0; i < n; ++i) t.rows[static_cast<std::size_t>(i)] = evaluate_row(xs[static_cast<std::size_t>(i)], tol);
  } else {
    for (std::ptrdiff_t i = 0; i < n; ++i) t.rows[static_cast<std::size_t>(i)] = evaluate_row(xs[static_cast<std::size_t>(i)], tol);
  }
  return t;
}

}  // namespace su11
