#include "su11/lemmas.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace su11 {

namespace {

// Relative accuracy required of the FD estimates against their closed forms.
constexpr double kAnalyticRelTol = 1e-6;

double rho_of(complex z, complex w) { return poincare_distance(z, w); }

nlohmann::json complex_json(complex z) { return nlohmann::json::array({z.real(), z.imag()}); }

void mark_step_failure(CheckResult& r, double residual, double tol) {
  r.status = CheckStatus::fail;
  r.details["error_class"] = "step_size";
  r.details["step_size_message"] = "Richardson residual exceeds the requested tolerance";
  r.details["worst_residual"] = residual;
  r.details["fd_tol"] = tol;
}

// Real-coordinate Hessian of rho in (u1, u2, v1, v2), step h.
std::array<double, 16> real_hessian(complex z, complex w, double h) {
  const complex u = z + w;
  const complex v = z - w;
  auto f = [&](const std::array<double, 4>& d) {
    const complex uu = u + complex(d[0], d[1]);
    const complex vv = v + complex(d[2], d[3]);
    return rho_of(0.5 * (uu + vv), 0.5 * (uu - vv));
  };
  const double f0 = f({0, 0, 0, 0});
  std::array<double, 16> hess{};
  for (int i = 0; i < 4; ++i) {
    std::array<double, 4> p{}, m{};
    p[i] = h;
    m[i] = -h;
    hess[i * 4 + i] = (f(p) - 2.0 * f0 + f(m)) / (h * h);
    for (int j = i + 1; j < 4; ++j) {
      std::array<double, 4> pp{}, pm{}, mp{}, mm{};
      pp[i] = h, pp[j] = h;
      pm[i] = h, pm[j] = -h;
      mp[i] = -h, mp[j] = h;
      mm[i] = -h, mm[j] = -h;
      const double mixed = (f(pp) - f(pm) - f(mp) + f(mm)) / (4.0 * h * h);
      hess[i * 4 + j] = mixed;
      hess[j * 4 + i] = mixed;
    }
  }
  return hess;
}

}  // namespace

bool within_step_tolerance(const FdEstimate& e, double tol) {
  const double scale = std::max(1.0, std::abs(e.value));
  // A residual is never certified below one rounding unit of the estimate.
  const double achieved = std::max(e.residual, std::numeric_limits<double>::epsilon() * scale);
  return std::isfinite(e.value) && achieved <= tol * scale;
}

complex vector_field(const LieVector& x, complex z) {
  const complex p(x.c, -x.b);
  const complex q(x.c, x.b);
  return p + complex(0.0, 2.0 * x.a) * z - q * z * z;
}

FdEstimate potential_moment_component(const BidiskPoint& p, const LieVector& x, double h) {
  const complex z = p.first.value();
  const complex w = p.second.value();
  const complex dz = complex(0.0, -1.0) * vector_field(x, z);
  const complex dw = complex(0.0, -1.0) * vector_field(x, w);
  return richardson_first([&](double s) { return rho_of(z + s * dz, w + s * dw); }, 0.0, h);
}

PotentialMoment potential_moment_vector(const BidiskPoint& p, double h) {
  const FdEstimate mx = potential_moment_component(p, LieVector::xi(), h);
  const FdEstimate me = potential_moment_component(p, LieVector::eta(), h);
  const FdEstimate mz = potential_moment_component(p, LieVector::zeta(), h);
  return {{mx.value, -me.value, -mz.value}, std::max({mx.residual, me.residual, mz.residual})};
}

ComplexHessian complex_hessian(const BidiskPoint& p, double h) {
  const complex z = p.first.value();
  const complex w = p.second.value();
  const auto h1 = real_hessian(z, w, h);
  const auto h2 = real_hessian(z, w, 2.0 * h);
  std::array<double, 16> r{};
  double residual = 0.0;
  for (int k = 0; k < 16; ++k) {
    r[k] = (4.0 * h1[k] - h2[k]) / 3.0;
    residual = std::max(residual, std::abs(h1[k] - h2[k]) / 3.0);
  }
  auto at = [&](int i, int j) { return r[i * 4 + j]; };
  ComplexHessian out;
  out.uu = 0.25 * (at(0, 0) + at(1, 1));
  out.vv = 0.25 * (at(2, 2) + at(3, 3));
  out.uv = 0.25 * complex(at(0, 2) + at(1, 3), at(0, 3) - at(1, 2));
  out.vu = 0.25 * complex(at(2, 0) + at(3, 1), at(2, 1) - at(3, 0));
  const double mean = 0.5 * (out.uu + out.vv);
  const double half_gap = std::hypot(0.5 * (out.uu - out.vv), std::abs(out.uv));
  out.min_eigenvalue = mean - half_gap;
  out.max_eigenvalue = mean + half_gap;
  // Scaled like the entries: the 1/4 factor applies to every complex entry.
  out.residual = 0.5 * residual;
  return out;
}

CheckResult radial_convexity_check(std::span<const double> grid, const VerificationConfig& cfg) {
  CheckResult r;
  r.name = "lemma.radial_convexity";
  r.tolerance = kAnalyticRelTol;
  auto h_fn = [](double x) {
    const double e = std::exp(x);
    return rho_of(e, -e);
  };
  double worst_dev = 0.0;
  double worst_residual = 0.0;
  double min_value = std::numeric_limits<double>::infinity();
  bool step_ok = true;
  bool positive = true;
  nlohmann::json rows = nlohmann::json::array();
  for (double x : grid) {
    if (!(x < 0.0)) throw std::domain_error("radial_convexity_check: grid points must be negative");
    const double h = std::min(cfg.fd_step, 1e-3 * std::abs(x));
    const FdEstimate e = richardson_second(h_fn, x, h);
    const double target = 2.0 * std::cosh(x) / (std::sinh(x) * std::sinh(x));
    const double dev = std::abs(e.value - target) / target;
    worst_dev = std::max(worst_dev, dev);
    worst_residual = std::max(worst_residual, e.residual / std::max(1.0, std::abs(e.value)));
    min_value = std::min(min_value, e.value);
    step_ok = step_ok && within_step_tolerance(e, cfg.fd_tol);
    positive = positive && e.value > 0.0;
    rows.push_back({{"x", x}, {"fd", e.value}, {"analytic", target}, {"residual", e.residual}});
  }
  // Blow-up probe just left of the origin.
  const double probe_x = -1e-3;
  const FdEstimate probe = richardson_second(h_fn, probe_x, 1e-3 * std::abs(probe_x));
  const bool diverges = probe.value > 1e3;
  step_ok = step_ok && within_step_tolerance(probe, cfg.fd_tol);

  r.value = worst_dev;
  r.details["grid"] = rows;
  r.details["min_second_derivative"] = min_value;
  r.details["max_relative_deviation"] = worst_dev;
  r.details["probe"] = {{"x", probe_x}, {"fd", probe.value}, {"threshold", 1e3}, {"diverges", diverges}};
  r.details["note"] = "h(x) = 2 artanh(2e^x/(1+e^{2x})) against h''(x) = 2cosh(x)/sinh(x)^2";
  r.status = (positive && diverges && worst_dev <= kAnalyticRelTol) ? CheckStatus::pass : CheckStatus::fail;
  if (!step_ok) mark_step_failure(r, std::max(worst_residual, probe.residual / std::abs(probe.value)), cfg.fd_tol);
  return r;
}

CheckResult schwarz_only_convexity_check(const VerificationConfig& cfg) {
  CheckResult r;
  r.name = "lemma.radial_convexity_schwarz_only";
  r.tolerance = kAnalyticRelTol;
  auto g = [](double x) {
    const double e = std::exp(x);
    return schwarz_distance(e, -e);
  };
  const FdEstimate e = richardson_second(g, 0.0, cfg.fd_step);
  r.value = e.value;
  r.details["x"] = 0.0;
  r.details["analytic"] = -1.0;
  r.details["residual"] = e.residual;
  r.details["claim"] = "2e^x/(1+e^{2x}) convex in x";
  r.details["finding"] = "second derivative at 0 is -1; convexity holds only after composing with 2 artanh";
  r.status = e.value < 0.0 ? CheckStatus::discrepancy : CheckStatus::fail;
  if (!within_step_tolerance(e, cfg.fd_tol)) mark_step_failure(r, e.residual, cfg.fd_tol);
  return r;
}

CheckResult curve_positivity_check(double t, double radius, int directions, const VerificationConfig& cfg) {
  if (!(t > 0.0 && t < 1.0)) throw std::domain_error("curve_positivity_check: t must lie in (0,1)");
  if (!(radius > 0.0) || directions < 1) throw std::invalid_argument("curve_positivity_check: bad grid");
  CheckResult r;
  r.name = "lemma.curve_positivity";
  r.tolerance = 0.0;
  const double base = rho_of(t, -t);
  auto delta = [&](complex u) { return rho_of(t + u, -t + u) - base; };
  double min_delta = std::numeric_limits<double>::infinity();
  double min_margin = std::numeric_limits<double>::infinity();
  nlohmann::json rows = nlohmann::json::array();
  for (int k = 0; k < directions; ++k) {
    const complex u = std::polar(radius, 2.0 * std::numbers::pi * k / directions);
    const double d = delta(u);
    const double lhs = std::norm(1.0 - (u + t) * (std::conj(u) - t));
    const double rhs = (1.0 + t * t) * (1.0 + t * t);
    min_delta = std::min(min_delta, d);
    min_margin = std::min(min_margin, rhs - lhs);
    rows.push_back({{"u", complex_json(u)}, {"delta", d}, {"lhs", lhs}, {"rhs", rhs}});
  }
  const FdEstimate curv = richardson_second([&](double s) { return delta(s); }, 0.0, cfg.fd_step);
  r.value = min_delta;
  r.details["t"] = t;
  r.details["radius"] = radius;
  r.details["delta_at_0"] = delta(0.0);
  r.details["grid"] = rows;
  r.details["min_inequality_margin"] = min_margin;
  r.details["real_second_difference"] = curv.value;
  r.details["residual"] = curv.residual;
  r.status = (min_delta > 0.0 && min_margin > 0.0 && curv.value > 0.0) ? CheckStatus::pass : CheckStatus::fail;
  if (!within_step_tolerance(curv, cfg.fd_tol)) mark_step_failure(r, curv.residual, cfg.fd_tol);
  return r;
}

CheckResult psh_hessian_check(const BidiskPoint& p, double step, const VerificationConfig& cfg) {
  const complex z = p.first.value();
  const complex w = p.second.value();
  if (std::abs(z - w) < 10.0 * step) {
    throw std::invalid_argument("psh_hessian_check: point within 10 steps of the diagonal");
  }
  const ComplexHessian hs = complex_hessian(p, step);
  CheckResult r;
  r.name = "lemma.psh_hessian";
  r.tolerance = 0.0;
  r.value = hs.min_eigenvalue;
  r.details["z"] = complex_json(z);
  r.details["w"] = complex_json(w);
  r.details["step"] = step;
  r.details["eigenvalues"] = {hs.min_eigenvalue, hs.max_eigenvalue};
  r.details["h_uu"] = hs.uu;
  r.details["h_vv"] = hs.vv;
  r.details["h_uv"] = complex_json(hs.uv);
  r.details["hermitian_defect"] = std::abs(hs.uv - std::conj(hs.vu));
  r.details["residual"] = hs.residual;
  r.status = hs.min_eigenvalue > 0.0 ? CheckStatus::pass : CheckStatus::fail;
  const FdEstimate as_estimate{hs.max_eigenvalue, hs.residual};
  if (!within_step_tolerance(as_estimate, cfg.fd_tol)) mark_step_failure(r, hs.residual, cfg.fd_tol);
  return r;
}

}  // namespace su11
