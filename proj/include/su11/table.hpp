#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace su11 {

/// Evaluation grid "min:max:points", log- or linearly spaced, endpoints
/// included.
struct GridSpec {
  double min = 1e-3;
  double max = 1e2;
  std::size_t points = 400;
  bool log = true;

  /// Throws std::invalid_argument on malformed text or an empty range.
  static GridSpec parse(std::string_view text, bool log);
  void validate() const;
  std::vector<double> values() const;
};

struct SpectralRow {
  double x = 0.0;
  double x_tilde = 0.0;
  double F_quad = 0.0;
  double F_paper_u = 0.0;
  double F_paper_prop = 0.0;
  double F_derived = 0.0;
  double f_quad = 0.0;
  /// The transcribed density, per unit x_tilde as written.
  double f_paper = 0.0;
};

struct SpectralTable {
  static constexpr std::string_view kHeader = "x,x_tilde,F_quad,F_paper_u,F_paper_prop,F_derived,f_quad,f_paper";

  std::vector<SpectralRow> rows;

  /// Header line plus one row per point, every value as %.17g.
  void write_csv(std::ostream& out) const;
  /// Parses a table written by write_csv. Errors name the offending line.
  static SpectralTable read_csv(std::istream& in);
};

/// Rows at the given strictly increasing positive x values. `parallel`
/// selects the OpenMP map; both paths give identical rows.
SpectralTable build_spectral_table(std::span<const double> xs, double tol = 1e-10, bool parallel = true);

/// "%.17g" formatting shared by every CSV writer.
std::string format_double(double v);

}  // namespace su11
