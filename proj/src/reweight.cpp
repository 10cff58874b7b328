#include "su11/reweight.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "su11/kernels.hpp"
#include "su11/spectral.hpp"

namespace su11 {

namespace {

constexpr double kSurvivalRelTol = 1e-12;

// Gauss-Legendre 4-point rule on [-1, 1].
constexpr std::array<double, 2> kGl4Nodes = {0.339981043584856264802665759103245, 0.861136311594052575223946488892810};
constexpr std::array<double, 2> kGl4Weights = {0.652145154862546142626936050778000, 0.347854845137453857373063949221999};

std::vector<double> clipped_breakpoints(const WeightSpec& w, double lo, double hi) {
  std::vector<double> bps{lo};
  for (double b : w.rho_breakpoints()) {
    if (b > lo && b < hi) bps.push_back(b);
  }
  bps.push_back(hi);
  return bps;
}

}  // namespace

ReweightedDistribution::ReweightedDistribution(WeightSpec weight, double tol) : weight_(std::move(weight)), tol_(tol) {
  if (weight_.is_uniform()) return;
  // w' vanishes (to double precision) beyond the last breakpoint.
  normalization_ = weight_(0.0) + by_parts_integral(0.0, weight_.rho_breakpoints().back());
  if (!std::isfinite(normalization_) || !(normalization_ > 0.0)) {
    throw std::invalid_argument("ReweightedDistribution: weight is not normalizable");
  }
}

double ReweightedDistribution::survival(double rho) const {
  return survival_quadrature(ScaleParams::from_rho(rho), 0.0, kSurvivalRelTol).value;
}

double ReweightedDistribution::by_parts_integral(double rho_lo, double rho_hi) const {
  if (!(rho_hi > rho_lo)) return 0.0;
  auto integrand = [this](double rho) { return weight_.derivative(rho) * survival(rho); };
  const auto bps = clipped_breakpoints(weight_, rho_lo, rho_hi);
  if (bps.size() == 2 && rho_hi - rho_lo < 1e-2) {
    const double c = 0.5 * (rho_lo + rho_hi);
    const double h = 0.5 * (rho_hi - rho_lo);
    double sum = 0.0;
    for (std::size_t k = 0; k < 2; ++k) {
      sum += kGl4Weights[k] * (integrand(c - h * kGl4Nodes[k]) + integrand(c + h * kGl4Nodes[k]));
    }
    return h * sum;
  }
  return integrate(integrand, bps, tol_, 0.0).value;
}

double ReweightedDistribution::density(double x) const {
  const double rho = 2.0 * std::asinh(0.25 * x);
  return pdf_quadrature(x) * weight_(rho) / normalization_;
}

double ReweightedDistribution::cdf(double x) const {
  if (weight_.is_uniform()) return cdf_quadrature(x).value;
  if (!(x >= 0.0)) throw std::domain_error("ReweightedDistribution::cdf: x must be nonnegative");
  if (x == 0.0) return 0.0;
  const double rho = 2.0 * std::asinh(0.25 * x);
  return (weight_(0.0) - weight_(rho) * survival(rho) + by_parts_integral(0.0, rho)) / normalization_;
}

std::vector<double> ReweightedDistribution::cdf_at_sorted(std::span<const double> sorted, bool parallel) const {
  const std::size_t n = sorted.size();
  std::vector<double> out(n);
  if (weight_.is_uniform()) {
    auto f = [](double x) { return cdf_quadrature(x).value; };
    if (parallel) {
      out = kernels::map_parallel(sorted, f);
    } else {
      out = kernels::map_serial(sorted, f);
    }
    return out;
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (sorted[i] < sorted[i - 1]) throw std::invalid_argument("cdf_at_sorted: points must be ascending");
  }
  std::vector<double> segment(n);
  std::vector<double> boundary(n);
  auto fill = [&](std::size_t i) {
    const double rho = 2.0 * std::asinh(0.25 * sorted[i]);
    const double prev = i == 0 ? 0.0 : 2.0 * std::asinh(0.25 * sorted[i - 1]);
    segment[i] = by_parts_integral(prev, rho);
    boundary[i] = sorted[i] == 0.0 ? weight_(0.0) : weight_(rho) * survival(rho);
  };
  const auto count = static_cast<std::ptrdiff_t>(n);
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 256)
    for (std::ptrdiff_t i = 0; i < count; ++i) fill(static_cast<std::size_t>(i));
  } else {
    for (std::ptrdiff_t i = 0; i < count; ++i) fill(static_cast<std::size_t>(i));
  }
  const double w0 = weight_(0.0);
  double running = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    running += segment[i];
    out[i] = (w0 - boundary[i] + running) / normalization_;
  }
  return out;
}

double reweight_density(const WeightSpec& weight, double x) { return ReweightedDistribution(weight).density(x); }

}  // namespace su11
