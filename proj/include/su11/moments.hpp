#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "su11/sampling.hpp"
#include "su11/weights.hpp"

namespace su11 {

struct MomentEstimate {
  double value = 0.0;
  /// Quadrature error bound, or one standard error for Monte-Carlo.
  double error = 0.0;
};

/// E(omega) = int_0^inf (1 - F_w(x)) dx by quadrature in rho. For the
/// uniform ensemble the integral runs to x = 1e8 and the remaining tail
/// 4 (4 log Y + 2) / Y, Y = cut/4, is added; `tail_bound` is a rigorous
/// upper bound for that tail.
struct MeanQuadrature {
  double value = 0.0;
  double quadrature_error = 0.0;
  double cut = 0.0;
  double tail_estimate = 0.0;
  double tail_bound = 0.0;

  double error() const { return quadrature_error + std::abs(tail_bound - tail_estimate); }
};

MeanQuadrature mean_quadrature(const WeightSpec& weight = WeightSpec::uniform(), double tol = 1e-10);

/// Self-normalised importance-sampling mean with a delta-method standard
/// error.
MomentEstimate mean_mc(const SampleBatch& batch);

/// int_0^cut x^order w dF / Z, the moment truncated at omega = cut.
MomentEstimate truncated_moment(const WeightSpec& weight, int order, double cut, double tol = 1e-9);

std::vector<MomentEstimate> truncated_second_moments(const WeightSpec& weight, std::span<const double> cuts);

}  // namespace su11
