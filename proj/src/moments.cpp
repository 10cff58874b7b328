#include "su11/moments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "su11/reweight.hpp"
#include "su11/spectral.hpp"

namespace su11 {

namespace {

constexpr double kSurvivalRelTol = 1e-12;
constexpr double kUniformMeanCut = 1e8;

double survival_at_rho(double rho) {
  return survival_quadrature(ScaleParams::from_rho(rho), 0.0, kSurvivalRelTol).value;
}

std::vector<double> rho_grid(const WeightSpec& w, double rho_max) {
  std::vector<double> bps{0.0};
  std::vector<double> candidates = w.rho_breakpoints();
  for (double b : {1.0, 2.0, 4.0, 8.0, 16.0, 32.0}) candidates.push_back(b);
  std::sort(candidates.begin(), candidates.end());
  for (double b : candidates) {
    if (b > bps.back() && b < rho_max) bps.push_back(b);
  }
  bps.push_back(rho_max);
  return bps;
}

// int_0^{rho_max} d/drho [x(rho)^order w(rho)] S(rho) drho.
QuadratureResult by_parts_moment(const WeightSpec& w, int order, double rho_max, double tol) {
  auto integrand = [&](double rho) {
    const double x = 4.0 * std::sinh(0.5 * rho);
    const double dx = 2.0 * std::cosh(0.5 * rho);
    const double xk1 = order == 1 ? 1.0 : std::pow(x, order - 1);
    const double dg = order * xk1 * dx * w(rho) + xk1 * x * w.derivative(rho);
    return dg * survival_at_rho(rho);
  };
  return integrate(integrand, rho_grid(w, rho_max), tol, tol);
}

}  // namespace

MeanQuadrature mean_quadrature(const WeightSpec& weight, double tol) {
  MeanQuadrature out;
  if (weight.is_uniform()) {
    out.cut = kUniformMeanCut;
    const double rho_cut = 2.0 * std::asinh(0.25 * out.cut);
    // With w = 1 the by-parts integrand is S dx/drho, so the body is
    // int_0^cut S dx directly.
    const QuadratureResult body = by_parts_moment(weight, 1, rho_cut, tol);
    const double y = 0.25 * out.cut;
    out.tail_estimate = 4.0 * (4.0 * std::log(y) + 2.0) / y;
    // S(y) <= 2 (1 + 1/y^2)(2 log y + 1/y^2) / y^2 for y >= 1.
    const double lead = 1.0 + 1.0 / (y * y);
    out.tail_bound = 4.0 * 2.0 * lead * (2.0 * (std::log(y) + 1.0) / y + 1.0 / (3.0 * y * y * y));
    out.value = body.value + out.tail_estimate;
    out.quadrature_error = body.abs_error;
    return out;
  }
  const ReweightedDistribution dist(weight);
  const double rho_end = std::max(weight.rho_breakpoints().back(), 40.0);
  const QuadratureResult body = by_parts_moment(weight, 1, rho_end, tol);
  out.cut = 4.0 * std::sinh(0.5 * rho_end);
  out.value = body.value / dist.normalization();
  out.quadrature_error = body.abs_error / dist.normalization();
  return out;
}

MomentEstimate mean_mc(const SampleBatch& batch) {
  if (batch.size() == 0) throw std::invalid_argument("mean_mc: empty batch");
  double sw = 0.0;
  double swx = 0.0;
  for (std::size_t i = 0; i < batch.size(); ++i) {
    sw += batch.weight[i];
    swx += batch.weight[i] * batch.omega[i];
  }
  const double mean = swx / sw;
  double var = 0.0;
  for (std::size_t i = 0; i < batch.size(); ++i) {
    const double d = batch.weight[i] * (batch.omega[i] - mean);
    var += d * d;
  }
  return {mean, std::sqrt(var) / sw};
}

MomentEstimate truncated_moment(const WeightSpec& weight, int order, double cut, double tol) {
  if (order < 1) throw std::invalid_argument("truncated_moment: order must be >= 1");
  if (!(cut > 0.0) || std::isinf(cut)) throw std::domain_error("truncated_moment: cut must be positive and finite");
  const double rho_cut = 2.0 * std::asinh(0.25 * cut);
  const QuadratureResult body = by_parts_moment(weight, order, rho_cut, tol);
  const double boundary = std::pow(cut, order) * weight(rho_cut) * survival_quadrature(cut, 0.0, kSurvivalRelTol).value;
  const double z = weight.is_uniform() ? 1.0 : ReweightedDistribution(weight).normalization();
  return {(body.value - boundary) / z, body.abs_error / z};
}

std::vector<MomentEstimate> truncated_second_moments(const WeightSpec& weight, std::span<const double> cuts) {
  std::vector<MomentEstimate> out;
  out.reserve(cuts.size());
  for (double cut : cuts) out.push_back(truncated_moment(weight, 2, cut));
  return out;
}

}  // namespace su11
