#pragma once

#include <span>
#include <vector>

#include "su11/kernels.hpp"
#include "su11/sampling.hpp"

namespace su11 {

/// Weighted empirical distribution function of a sample batch. Weights are
/// self-normalised.
class EmpiricalCdf {
 public:
  /// Throws std::invalid_argument for an empty batch or a zero total weight.
  explicit EmpiricalCdf(const SampleBatch& batch);
  EmpiricalCdf(std::span<const double> values, std::span<const double> weights);

  /// Fraction of weight on samples <= x.
  double operator()(double x) const;

  /// Sorted sample values and the normalised cumulative weight through each.
  const std::vector<double>& points() const { return points_; }
  const std::vector<double>& cumulative() const { return cumulative_; }
  double total_weight() const { return total_weight_; }
  /// (sum w)^2 / sum w^2.
  double effective_sample_size() const { return ess_; }

 private:
  std::vector<double> points_;
  std::vector<double> cumulative_;
  double total_weight_ = 0.0;
  double ess_ = 0.0;
};

inline EmpiricalCdf empirical_cdf(const SampleBatch& batch) { return EmpiricalCdf(batch); }

/// sup |F_hat - F| for a continuous model F, given F at ecdf.points().
double ks_distance(const EmpiricalCdf& ecdf, std::span<const double> model_at_points);

/// Two-sample statistic sup_x |F_a(x) - F_b(x)|.
double ks_distance(const EmpiricalCdf& a, const EmpiricalCdf& b);

/// One-sample statistic against a model CDF; the model is evaluated at the
/// sorted sample points with the OpenMP map kernel.
template <class Cdf>
double ks_distance(const SampleBatch& batch, Cdf&& cdf) {
  const EmpiricalCdf ecdf(batch);
  const std::vector<double> model = kernels::map_parallel(ecdf.points(), cdf);
  return ks_distance(ecdf, model);
}

}  // namespace su11
