#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace su11 {

/// Phase-space weight as a function of the orbit invariant rho = d_P(z, w).
class WeightSpec {
 public:
  enum class Kind { uniform, exp_distance, gaussian_distance, custom_table };

  WeightSpec() = default;

  static WeightSpec uniform() { return WeightSpec(Kind::uniform); }
  /// e^{-rho}
  static WeightSpec exp_distance() { return WeightSpec(Kind::exp_distance); }
  /// e^{-rho^2}
  static WeightSpec gaussian_distance() { return WeightSpec(Kind::gaussian_distance); }
  /// Piecewise-linear in rho through (rho_i, w_i), constant beyond the last
  /// node. Requires strictly increasing rho_0 = 0 < rho_1 < ... and w_i >= 0.
  static WeightSpec custom_table(std::vector<std::pair<double, double>> nodes);

  /// Parses "uniform" | "exp" | "gaussian"; custom tables come from files.
  static WeightSpec parse(std::string_view name);

  /// Reads a CSV with header "rho,weight".
  static WeightSpec load_table(const std::string& path);

  Kind kind() const { return kind_; }
  std::string name() const;
  bool is_uniform() const { return kind_ == Kind::uniform; }

  double operator()(double rho) const;
  /// dw/drho.
  double derivative(double rho) const;

  /// Upper end of the rho range beyond which the weight's contribution to any
  /// normalisation integral is below double precision, plus the points where
  /// the weight has kinks.
  std::vector<double> rho_breakpoints() const;

  const std::vector<std::pair<double, double>>& table() const { return table_; }

 private:
  explicit WeightSpec(Kind kind) : kind_(kind) {}

  Kind kind_ = Kind::uniform;
  std::vector<std::pair<double, double>> table_;
};

}  // namespace su11
