#pragma once

#include <span>
#include <vector>

#include "su11/weights.hpp"

namespace su11 {

/// The omega distribution under the phase-space density proportional to
/// w(rho(z, w)). Since omega = 4 sinh(rho/2) is a monotone function of the
/// single orbit invariant rho, the reweighted density is f(x) w(rho(x)) / Z.
///
/// CDFs are assembled by parts from the survival function S = 1 - F:
///   int_0^x w dF = w(0) - w(rho_x) S(x) + int_0^{rho_x} w'(rho) S(rho) drho,
/// which needs no numerical derivative of F.
class ReweightedDistribution {
 public:
  /// Throws std::invalid_argument if the normalisation is not finite and
  /// positive.
  explicit ReweightedDistribution(WeightSpec weight, double tol = 1e-12);

  const WeightSpec& weight() const { return weight_; }
  /// Z = E_uniform[w].
  double normalization() const { return normalization_; }

  double density(double x) const;
  double cdf(double x) const;

  /// CDF at ascending points, accumulating the by-parts integral segment by
  /// segment. `parallel` selects the OpenMP kernel; both paths give
  /// identical bytes.
  std::vector<double> cdf_at_sorted(std::span<const double> sorted, bool parallel = true) const;

 private:
  double survival(double rho) const;
  double by_parts_integral(double rho_lo, double rho_hi) const;

  WeightSpec weight_;
  double tol_;
  double normalization_ = 1.0;
};

/// f_w(x) for a one-off evaluation.
double reweight_density(const WeightSpec& weight, double x);

}  // namespace su11
