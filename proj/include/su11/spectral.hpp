#pragma once

#include "su11/quadrature.hpp"

namespace su11 {

/// The eigenvalue scale x = omega and the equivalent orbit invariants:
///   x_tilde = x/4 = sinh(rho/2),  u = d_S = tanh(rho/2),  t = tanh(rho/4).
/// one_minus_u is carried separately so tails keep relative precision.
struct ScaleParams {
  double x = 0.0;
  double x_tilde = 0.0;
  double u = 0.0;
  double one_minus_u = 1.0;
  double rho = 0.0;

  static ScaleParams from_omega(double x);
  static ScaleParams from_rho(double rho);
  static ScaleParams from_u(double u);
};

/// Euclidean radius u(1 - s^2) / (1 - s^2 u^2) of the fiber disk over the
/// first-coordinate point s for threshold x.
double fiber_radius(double s, double x);

inline constexpr double kDefaultCdfTolerance = 1e-10;

/// F(x) = P(omega < x) = 2 int_0^1 r(s, x)^2 s ds by adaptive quadrature to
/// absolute tolerance tol. converged == false flags an unattainable tol;
/// value then carries the best estimate and abs_error its error bound.
QuadratureResult cdf_quadrature(double x, double tol = kDefaultCdfTolerance);

/// 1 - F(x) = 2 int_0^1 (1 - r)(1 + r) s ds, integrated with relative
/// accuracy so the heavy upper tail stays resolved.
QuadratureResult survival_quadrature(double x, double abs_tol, double rel_tol);
QuadratureResult survival_quadrature(const ScaleParams& p, double abs_tol, double rel_tol);

/// Density of omega: Richardson-extrapolated central difference of the
/// quadrature CDF (of the survival function above the median). rel_tol
/// sets the quadrature accuracy underneath.
double pdf_quadrature(double x, double rel_tol = 1e-13);

/// Literal expression F = 2 (1-u^2)/u^2 log(1-u^2) + 2 - u^2.
double cdf_closed_paper_u(double u);

/// Literal expression F = -2/x~^2 log(1 + x~^2) + 1/(1 + x~^2).
double cdf_closed_paper_prop(double x_tilde);

/// Literal expression f = 4/x~^3 log(1 + x~^2) - (6x~^2 + 4)/(x~ (1 + x~^2)^2),
/// a density per unit x_tilde.
double pdf_closed_paper(double x_tilde);

/// Exact evaluation of the fiber integral:
///   F = 2/u^2 - 1 + 2 (1 - u^2) log(1 - u^2) / u^4
///     = sum_{k>=1} 2 u^{2k} / ((k+1)(k+2)).
double cdf_closed_derived(double u);

/// d/dx of cdf_closed_derived(u(x)); per unit x.
double pdf_closed_derived(double x);

/// Coefficient of x^{2k-1} in the power series
///   f(x) = sum_{k>=2} (-1)^k/2 * k(k-1)/(k+1) * (x/4)^{2k-1}.
double series_coefficient(int k);

/// Partial sum of the series above through k = last_k.
double series_density(double x, int last_k = 60);

}  // namespace su11
