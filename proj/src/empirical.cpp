#include "su11/empirical.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace su11 {

EmpiricalCdf::EmpiricalCdf(const SampleBatch& batch) : EmpiricalCdf(batch.omega, batch.weight) {}

EmpiricalCdf::EmpiricalCdf(std::span<const double> values, std::span<const double> weights) {
  if (values.empty()) throw std::invalid_argument("empirical CDF of an empty batch");
  if (values.size() != weights.size()) throw std::invalid_argument("empirical CDF: value/weight size mismatch");
  std::vector<std::pair<double, double>> sorted(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) sorted[i] = {values[i], weights[i]};
  std::sort(sorted.begin(), sorted.end());

  points_.resize(sorted.size());
  cumulative_.resize(sorted.size());
  double running = 0.0;
  double sum_sq = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    points_[i] = sorted[i].first;
    running += sorted[i].second;
    sum_sq += sorted[i].second * sorted[i].second;
    cumulative_[i] = running;
  }
  if (!(running > 0.0)) throw std::invalid_argument("empirical CDF: total weight must be positive");
  for (double& c : cumulative_) c /= running;
  cumulative_.back() = 1.0;
  total_weight_ = running;
  ess_ = running * running / sum_sq;
}

double EmpiricalCdf::operator()(double x) const {
  const auto it = std::upper_bound(points_.begin(), points_.end(), x);
  if (it == points_.begin()) return 0.0;
  return cumulative_[static_cast<std::size_t>(it - points_.begin()) - 1];
}

double ks_distance(const EmpiricalCdf& ecdf, std::span<const double> model_at_points) {
  const auto& pts = ecdf.points();
  const auto& cum = ecdf.cumulative();
  if (model_at_points.size() != pts.size()) throw std::invalid_argument("ks_distance: model size mismatch");
  double sup = 0.0;
  double below = 0.0;  // empirical mass strictly left of the current tie group
  std::size_t i = 0;
  while (i < pts.size()) {
    std::size_t j = i;
    while (j + 1 < pts.size() && pts[j + 1] == pts[i]) ++j;
    const double model = model_at_points[i];
    sup = std::max({sup, std::abs(cum[j] - model), std::abs(below - model)});
    below = cum[j];
    i = j + 1;
  }
  return sup;
}

double ks_distance(const EmpiricalCdf& a, const EmpiricalCdf& b) {
  double sup = 0.0;
  for (double x : a.points()) sup = std::max(sup, std::abs(a(x) - b(x)));
  for (double x : b.points()) sup = std::max(sup, std::abs(a(x) - b(x)));
  return sup;
}

}  // namespace su11
