#pragma once

#include <functional>
#include <span>
#include <vector>

#include "su11/report.hpp"
#include "su11/weights.hpp"

namespace su11 {

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Ordinary least squares y = slope * x + intercept. Needs >= 2 points.
LinearFit least_squares(std::span<const double> xs, std::span<const double> ys);

/// Least-squares slope of log f against log x on `points` log-spaced
/// abscissae in [lo, hi].
LinearFit loglog_slope(const std::function<double(double)>& f, double lo, double hi, int points = 21);

/// Fit of f_quad(x) x^3 = slope * log x + intercept on log-spaced x in
/// [lo, hi]; a good fit with positive slope is f ~ log(x) / x^3.
LinearFit density_tail_fit(double lo = 1e3, double hi = 1e5, int points = 21);

/// Truncated second moments on three geometric cuts c, c r, c r^2 compared
/// with pure (log x)^2 growth. If E2(X) ~ A log(X)^2 + B log(X) + C then
/// the second difference over the cuts equals 2 A log(r)^2, and a density
/// tail f ~ c log(x) / x^3 predicts A = c / 2.
struct SecondMomentGrowth {
  std::vector<double> cuts;
  std::vector<double> values;
  bool strictly_increasing = false;
  double curvature_coefficient = 0.0;  // A from the second difference
  double tail_coefficient = 0.0;       // c / 2 from density_tail_fit
  double relative_gap = 0.0;           // |A - c/2| / (c/2)
};

SecondMomentGrowth second_moment_growth(std::span<const double> cuts);

/// Mean of the transcribed u-form distribution in x_tilde units,
/// int_0^inf (1 - F_paper_u) dx_tilde.
double paper_u_form_mean_tilde();

/// Comparison of the transcribed closed forms, series and moment claims
/// with the quadrature ground truth. Deterministic; uses no sampling
/// except the seeded fiber-radius spot check.
std::vector<CheckResult> discrepancy_ledger(const VerificationConfig& cfg);

inline constexpr double kSecondMomentGrowthTolerance = 0.2;

}  // namespace su11
