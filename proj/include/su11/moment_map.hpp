#pragma once

#include "su11/disk.hpp"

namespace su11 {

/// Restricted moment map on the slice t -> (t, -t): x = 8t / (1 - t^2).
/// Throws std::domain_error outside [0, 1).
double mu_slice(double t);

/// Inverse of mu_slice, t = (sqrt(16 + x^2) - 4) / x. Throws for x < 0.
double mu_slice_invert(double x);

/// Slice parameter t in [0,1) of the orbit whose Schwarz invariant is q,
/// i.e. the solution of q = 2t / (1 + t^2).
double slice_parameter(double q);

/// Eigenvalue scale omega of the moment image; equals 4q / sqrt(1 - q^2)
/// with q = d_S(z, w).
double omega_of_pair(complex z, complex w);
inline double omega_of_pair(const BidiskPoint& p) { return omega_of_pair(p.first.value(), p.second.value()); }

inline BidiskPoint slice_point(double t) { return {DiskPoint(t, 0.0), DiskPoint(-t, 0.0)}; }

/// A point on the slice together with a group element carrying it back to
/// the original point: act_bidisk(g, slice_point(t)) == input.
struct SliceReduction {
  double t = 0.0;
  MobiusTransform g;
};

/// Reduction to the slice: translate the first coordinate to 0, rotate the
/// second onto the positive axis, translate by t so the pair becomes
/// (-t, t), then apply the half turn. Diagonal points return t = 0 and the
/// translation carrying (0, 0) to the input.
SliceReduction slice_reduce(const BidiskPoint& p);

/// su(1,1)-valued moment map. Off the diagonal the value lies in the
/// positive elliptic cone (positive xi-coefficient on the slice); the
/// diagonal maps to zero.
LieVector moment_vector(const BidiskPoint& p);

/// Fixed point in the disk of the one-parameter group generated by an
/// elliptic element.
complex elliptic_fixed_point(const LieVector& y);

/// A point whose moment image is y. Requires y elliptic-positive or zero;
/// throws std::domain_error otherwise.
BidiskPoint moment_preimage(const LieVector& y);

}  // namespace su11
