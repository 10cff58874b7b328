#include "su11/disk.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace su11 {

DiskPoint::DiskPoint(complex z) : z_(z) {
  if (!(std::abs(z) < 1.0 - kBoundaryGuard)) {
    throw std::domain_error("DiskPoint: point lies outside the guarded open unit disk");
  }
}

double schwarz_distance(complex z, complex w) { return std::abs(z - w) / std::abs(1.0 - std::conj(w) * z); }

double schwarz_complement(complex z, complex w) {
  const double az = std::abs(z);
  const double aw = std::abs(w);
  return (1.0 - az) * (1.0 + az) * ((1.0 - aw) * (1.0 + aw)) / std::norm(1.0 - std::conj(w) * z);
}

double poincare_distance(complex z, complex w) {
  if (z == w) return 0.0;
  const double q = schwarz_distance(z, w);
  // log((1+q)/(1-q)) with 1-q recovered from the complement 1-q^2.
  const double one_minus_q = schwarz_complement(z, w) / (1.0 + q);
  return std::max(0.0, std::log1p(q) - std::log(one_minus_q));
}

EuclideanDisk hyperbolic_disk_euclidean(double center, double schwarz_radius) {
  if (!(center >= 0.0 && center < 1.0)) throw std::domain_error("hyperbolic_disk_euclidean: center must lie in [0, 1)");
  if (!(schwarz_radius > 0.0 && schwarz_radius < 1.0)) {
    throw std::domain_error("hyperbolic_disk_euclidean: radius must lie in (0, 1)");
  }
  // T_{-s} carries the ball around 0 onto the ball around s and preserves the
  // real axis, which meets the image orthogonally in a diameter.
  const MobiusTransform to_center = MobiusTransform::translation(-center);
  const double right = to_center.apply(schwarz_radius).real();
  const double left = to_center.apply(-schwarz_radius).real();
  return {0.5 * (right + left), 0.5 * (right - left)};
}

}  // namespace su11
