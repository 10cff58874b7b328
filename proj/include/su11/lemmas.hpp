#pragma once

#include <cmath>
#include <span>

#include "su11/disk.hpp"
#include "su11/report.hpp"

namespace su11 {

/// Richardson-extrapolated finite difference and the size of the
/// correction, |D(h) - D(2h)| / 3.
struct FdEstimate {
  double value = 0.0;
  double residual = 0.0;
};

template <class F>
FdEstimate richardson_first(F&& f, double x, double h) {
  const double d1 = (f(x + h) - f(x - h)) / (2.0 * h);
  const double d2 = (f(x + 2.0 * h) - f(x - 2.0 * h)) / (4.0 * h);
  return {(4.0 * d1 - d2) / 3.0, std::abs(d1 - d2) / 3.0};
}

template <class F>
FdEstimate richardson_second(F&& f, double x, double h) {
  const double f0 = f(x);
  const double d1 = (f(x + h) - 2.0 * f0 + f(x - h)) / (h * h);
  const double d2 = (f(x + 2.0 * h) - 2.0 * f0 + f(x - 2.0 * h)) / (4.0 * h * h);
  return {(4.0 * d1 - d2) / 3.0, std::abs(d1 - d2) / 3.0};
}

/// True when the residual is within tol relative to max(1, |value|).
bool within_step_tolerance(const FdEstimate& e, double tol);

/// Infinitesimal generator of the Moebius action of x at z:
///   (c - ib) + 2ia z - (c + ib) z^2.
complex vector_field(const LieVector& x, complex z);

/// mu_X(p) = -J Xhat(p)(rho): derivative of the Poincare potential along
/// -i Xhat at both coordinates, by Richardson central differences.
FdEstimate potential_moment_component(const BidiskPoint& p, const LieVector& x, double h);

struct PotentialMoment {
  LieVector value;
  double residual = 0.0;
};

/// The su(1,1)-valued moment map assembled from the three potential
/// components through the b-duality, in the sign convention of
/// moment_vector: (mu_xi, -mu_eta, -mu_zeta).
PotentialMoment potential_moment_vector(const BidiskPoint& p, double h);

/// Complex Hessian of rho in the coordinates u = z + w, v = z - w.
struct ComplexHessian {
  double uu = 0.0;    // d^2 rho / du du-bar
  double vv = 0.0;    // d^2 rho / dv dv-bar
  complex uv;         // d^2 rho / du dv-bar
  complex vu;         // d^2 rho / dv du-bar
  double min_eigenvalue = 0.0;
  double max_eigenvalue = 0.0;
  double residual = 0.0;
};

/// Richardson-extrapolated Hessian from steps h and 2h.
ComplexHessian complex_hessian(const BidiskPoint& p, double h);

/// Convexity of h(x) = rho(e^x, -e^x) for x < 0, against the closed form
/// h''(x) = 2 cosh(x) / sinh(x)^2, plus a blow-up probe just left of 0.
CheckResult radial_convexity_check(std::span<const double> grid, const VerificationConfig& cfg);

/// Second derivative at x = 0 of the Schwarz distance alone,
/// x -> 2e^x / (1 + e^{2x}); negative, so convexity needs the artanh.
CheckResult schwarz_only_convexity_check(const VerificationConfig& cfg);

/// delta(u) = rho(t + u, -t + u) - rho(t, -t) on a punctured circle of
/// complex u, its second difference along real u, and the equivalent
/// inequality |1 - (u + t)(conj(u) - t)|^2 < (1 + t^2)^2.
CheckResult curve_positivity_check(double t, double radius, int directions, const VerificationConfig& cfg);

/// Strict plurisubharmonicity at one off-diagonal point. Throws
/// std::invalid_argument when |z - w| < 10 * step.
CheckResult psh_hessian_check(const BidiskPoint& p, double step, const VerificationConfig& cfg);

}  // namespace su11
