#pragma once

#include "su11/mobius.hpp"

namespace su11 {

/// Point of the open unit disk. Construction fails for |z| >= 1 - 1e-12.
class DiskPoint {
 public:
  static constexpr double kBoundaryGuard = 1e-12;

  DiskPoint() = default;
  explicit DiskPoint(complex z);
  DiskPoint(double x, double y) : DiskPoint(complex(x, y)) {}

  complex value() const { return z_; }
  double abs() const { return std::abs(z_); }

 private:
  complex z_{0.0, 0.0};
};

/// Point (z, w) of the bidisk.
struct BidiskPoint {
  static constexpr double kDiagonalThreshold = 1e-13;

  DiskPoint first;
  DiskPoint second;

  bool is_diagonal() const { return std::abs(first.value() - second.value()) < kDiagonalThreshold; }
};

/// d_S(z,w) = |z - w| / |1 - conj(w) z|, in [0, 1).
double schwarz_distance(complex z, complex w);
inline double schwarz_distance(DiskPoint z, DiskPoint w) { return schwarz_distance(z.value(), w.value()); }

/// 1 - d_S(z,w)^2 evaluated as (1-|z|^2)(1-|w|^2)/|1 - conj(w) z|^2, which
/// keeps full relative precision near the boundary.
double schwarz_complement(complex z, complex w);

/// Hyperbolic distance rho = 2 artanh(d_S) = log((1 + d_S) / (1 - d_S)).
double poincare_distance(complex z, complex w);
inline double poincare_distance(DiskPoint z, DiskPoint w) { return poincare_distance(z.value(), w.value()); }

/// The automorphism T_zeta(z) = (z - zeta) / (1 - conj(zeta) z).
inline MobiusTransform translate(DiskPoint zeta) { return MobiusTransform::translation(zeta.value()); }

inline DiskPoint act(const MobiusTransform& g, DiskPoint z) { return DiskPoint(g.apply(z.value())); }

/// Diagonal action g.(z, w) = (g z, g w).
inline BidiskPoint act_bidisk(const MobiusTransform& g, const BidiskPoint& p) {
  return {act(g, p.first), act(g, p.second)};
}

struct EuclideanDisk {
  double center = 0.0;
  double radius = 0.0;
};

/// The Schwarz ball {w : d_S(s, w) < u} around a real center s in [0, 1),
/// located through the Moebius images of its diameter endpoints +-u. The
/// result is a Euclidean disk centred on the real axis.
EuclideanDisk hyperbolic_disk_euclidean(double center, double schwarz_radius);

}  // namespace su11
