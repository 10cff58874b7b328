#include "su11/spectral.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace su11 {

ScaleParams ScaleParams::from_omega(double x) {
  if (!(x >= 0.0)) throw std::domain_error("ScaleParams: omega must be nonnegative");
  ScaleParams p;
  p.x = x;
  if (std::isinf(x)) {
    p.x_tilde = x;
    p.u = 1.0;
    p.one_minus_u = 0.0;
    p.rho = x;
    return p;
  }
  p.x_tilde = 0.25 * x;
  const double c = std::hypot(1.0, p.x_tilde);
  p.u = p.x_tilde / c;
  p.one_minus_u = 1.0 / (c * (c + p.x_tilde));
  p.rho = 2.0 * std::asinh(p.x_tilde);
  return p;
}

ScaleParams ScaleParams::from_rho(double rho) {
  if (!(rho >= 0.0)) throw std::domain_error("ScaleParams: rho must be nonnegative");
  ScaleParams p;
  p.rho = rho;
  p.x_tilde = std::sinh(0.5 * rho);
  p.x = 4.0 * p.x_tilde;
  p.u = std::tanh(0.5 * rho);
  p.one_minus_u = 2.0 / (1.0 + std::exp(rho));
  return p;
}

ScaleParams ScaleParams::from_u(double u) {
  if (!(u >= 0.0 && u < 1.0)) throw std::domain_error("ScaleParams: u must lie in [0, 1)");
  ScaleParams p;
  p.u = u;
  p.one_minus_u = 1.0 - u;
  p.x_tilde = u / std::sqrt(p.one_minus_u * (1.0 + u));
  p.x = 4.0 * p.x_tilde;
  p.rho = 2.0 * std::atanh(u);
  return p;
}

namespace {

// 1 - s u, accurate when both s and u approach 1.
double one_minus_su(double s, const ScaleParams& p) { return (1.0 - s) + s * p.one_minus_u; }

double radius(double s, const ScaleParams& p) {
  return p.u * (1.0 - s) * (1.0 + s) / (one_minus_su(s, p) * (1.0 + s * p.u));
}

double radius_complement(double s, const ScaleParams& p) {
  return p.one_minus_u * (1.0 + p.u * s * s) / (one_minus_su(s, p) * (1.0 + s * p.u));
}

// The fiber radius approaches 1 except in a layer of width ~(1 - u) at s = 1.
std::vector<double> fiber_breakpoints(const ScaleParams& p) {
  std::vector<double> bps{0.0};
  const double eps = p.one_minus_u;
  for (double k : {512.0, 64.0, 8.0, 1.0}) {
    const double b = 1.0 - k * eps;
    if (b > bps.back() && b < 1.0) bps.push_back(b);
  }
  bps.push_back(1.0);
  return bps;
}

QuadratureResult cdf_value(const ScaleParams& p, double abs_tol, double rel_tol) {
  if (p.u == 0.0) return {0.0, 0.0, 0, true};
  if (p.one_minus_u == 0.0) return {1.0, 0.0, 0, true};
  auto integrand = [&p](double s) {
    const double r = radius(s, p);
    return 2.0 * s * r * r;
  };
  return integrate(integrand, fiber_breakpoints(p), abs_tol, rel_tol);
}

}  // namespace

double fiber_radius(double s, double x) {
  if (!(s >= 0.0 && s < 1.0)) throw std::domain_error("fiber_radius: s must lie in [0, 1)");
  if (!(x >= 0.0) || std::isinf(x)) throw std::domain_error("fiber_radius: x must be finite and nonnegative");
  return radius(s, ScaleParams::from_omega(x));
}

QuadratureResult cdf_quadrature(double x, double tol) {
  if (!(x >= 0.0)) throw std::domain_error("cdf_quadrature: x must be nonnegative");
  return cdf_value(ScaleParams::from_omega(x), tol, 0.0);
}

QuadratureResult survival_quadrature(const ScaleParams& p, double abs_tol, double rel_tol) {
  if (p.u == 0.0) return {1.0, 0.0, 0, true};
  if (p.one_minus_u == 0.0) return {0.0, 0.0, 0, true};
  auto integrand = [&p](double s) { return 2.0 * s * radius_complement(s, p) * (1.0 + radius(s, p)); };
  return integrate(integrand, fiber_breakpoints(p), abs_tol, rel_tol);
}

QuadratureResult survival_quadrature(double x, double abs_tol, double rel_tol) {
  if (!(x >= 0.0)) throw std::domain_error("survival_quadrature: x must be nonnegative");
  return survival_quadrature(ScaleParams::from_omega(x), abs_tol, rel_tol);
}

double pdf_quadrature(double x, double rel_tol) {
  if (!(x > 0.0) || std::isinf(x)) throw std::domain_error("pdf_quadrature: x must be positive and finite");
  // Differentiate whichever of F, 1 - F is small at x so the quadrature's
  // relative accuracy carries over to the difference quotient.
  const bool upper = x > 8.0;
  auto g = [&](double y) {
    const ScaleParams p = ScaleParams::from_omega(y);
    return upper ? -survival_quadrature(p, 0.0, rel_tol).value : cdf_value(p, 0.0, rel_tol).value;
  };
  const double h = 1e-3 * x;
  const double d1 = (g(x + h) - g(x - h)) / (2.0 * h);
  const double d2 = (g(x + 2.0 * h) - g(x - 2.0 * h)) / (4.0 * h);
  return (4.0 * d1 - d2) / 3.0;
}

double cdf_closed_paper_u(double u) {
  if (!(u >= 0.0 && u < 1.0)) throw std::domain_error("cdf_closed_paper_u: u must lie in [0, 1)");
  const double a = u * u;
  if (a < 1e-2) {
    // Taylor series of the same expression: sum_{k>=1} 2 a^{k+1} / ((k+1)(k+2)).
    double sum = 0.0;
    double power = a * a;
    for (int k = 1; k <= 30; ++k) {
      sum += 2.0 * power / ((k + 1.0) * (k + 2.0));
      power *= a;
    }
    return sum;
  }
  return 2.0 * (1.0 - a) / a * std::log1p(-a) + 2.0 - a;
}

double cdf_closed_paper_prop(double x_tilde) {
  if (!(x_tilde >= 0.0)) throw std::domain_error("cdf_closed_paper_prop: x_tilde must be nonnegative");
  const double y2 = x_tilde * x_tilde;
  if (x_tilde < 1e-4) return -1.0 + y2 * y2 / 3.0;
  if (std::isinf(x_tilde)) return 0.0;
  return -2.0 / y2 * std::log1p(y2) + 1.0 / (1.0 + y2);
}

double pdf_closed_paper(double y) {
  if (!(y >= 0.0)) throw std::domain_error("pdf_closed_paper: x_tilde must be nonnegative");
  if (std::isinf(y)) return 0.0;
  const double y2 = y * y;
  if (y < 0.1) {
    // Term-by-term derivative of sum_{j>=2} (-1)^j (j-1)/(j+1) y^{2j}.
    double sum = 0.0;
    double power = y2 * y;
    for (int j = 2; j <= 16; ++j) {
      const double sign = (j % 2 == 0) ? 1.0 : -1.0;
      sum += sign * 2.0 * j * (j - 1.0) / (j + 1.0) * power;
      power *= y2;
    }
    return sum;
  }
  const double q = 1.0 + y2;
  return 4.0 / (y2 * y) * std::log1p(y2) - (6.0 * y2 + 4.0) / (y * q * q);
}

double cdf_closed_derived(double u) {
  if (!(u >= 0.0 && u <= 1.0)) throw std::domain_error("cdf_closed_derived: u must lie in [0, 1]");
  if (u == 1.0) return 1.0;
  const double a = u * u;
  if (a < 0.1) {
    double sum = 0.0;
    double power = a;
    for (int k = 1; k <= 40; ++k) {
      sum += 2.0 * power / ((k + 1.0) * (k + 2.0));
      power *= a;
    }
    return sum;
  }
  const double one_minus_a = (1.0 - u) * (1.0 + u);
  return 2.0 / a - 1.0 + 2.0 * one_minus_a * std::log(one_minus_a) / (a * a);
}

double pdf_closed_derived(double x) {
  if (!(x >= 0.0)) throw std::domain_error("pdf_closed_derived: x must be nonnegative");
  if (std::isinf(x)) return 0.0;
  const double y = 0.25 * x;
  const double y2 = y * y;
  const double a = y2 / (1.0 + y2);
  if (a < 0.1) {
    double dfda = 0.0;
    double power = 1.0;
    for (int k = 1; k <= 40; ++k) {
      dfda += 2.0 * k * power / ((k + 1.0) * (k + 2.0));
      power *= a;
    }
    const double dady = 2.0 * y / ((1.0 + y2) * (1.0 + y2));
    return 0.25 * dfda * dady;
  }
  const double dfdy = -8.0 / (y2 * y) + std::log1p(y2) * (8.0 + 4.0 * y2) / (y2 * y2 * y);
  return 0.25 * dfdy;
}

double series_coefficient(int k) {
  if (k < 2) throw std::invalid_argument("series_coefficient: k must be >= 2");
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  return sign * 0.5 * k * (k - 1.0) / (k + 1.0) * std::ldexp(1.0, -2 * (2 * k - 1));
}

double series_density(double x, int last_k) {
  double sum = 0.0;
  for (int k = 2; k <= last_k; ++k) sum += series_coefficient(k) * std::pow(x, 2 * k - 1);
  return sum;
}

}  // namespace su11
