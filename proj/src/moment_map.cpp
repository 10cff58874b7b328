#include "su11/moment_map.hpp"

#include <cmath>
#include <stdexcept>

namespace su11 {

double mu_slice(double t) {
  if (!(t >= 0.0 && t < 1.0)) throw std::domain_error("mu_slice: t must lie in [0, 1)");
  return 8.0 * t / ((1.0 - t) * (1.0 + t));
}

double mu_slice_invert(double x) {
  if (!(x >= 0.0)) throw std::domain_error("mu_slice_invert: x must be nonnegative");
  if (std::isinf(x)) return 1.0;
  // Rationalised form of (sqrt(16 + x^2) - 4) / x; no cancellation at small x.
  return x / (std::hypot(4.0, x) + 4.0);
}

double slice_parameter(double q) {
  if (!(q >= 0.0 && q < 1.0)) throw std::domain_error("slice_parameter: q must lie in [0, 1)");
  return q / (1.0 + std::sqrt((1.0 - q) * (1.0 + q)));
}

double omega_of_pair(complex z, complex w) {
  const double az = std::abs(z);
  const double aw = std::abs(w);
  return 4.0 * std::abs(z - w) / std::sqrt((1.0 - az) * (1.0 + az) * ((1.0 - aw) * (1.0 + aw)));
}

SliceReduction slice_reduce(const BidiskPoint& p) {
  const MobiusTransform center = MobiusTransform::translation(p.first.value());
  const complex w1 = center.apply(p.second.value());
  if (w1 == complex(0.0, 0.0)) return {0.0, center.inverse()};

  const MobiusTransform align = MobiusTransform::rotation(-std::arg(w1));
  const double q = std::abs(w1);
  const double t = slice_parameter(q);
  const MobiusTransform shift = MobiusTransform::translation(t);
  const MobiusTransform forward = MobiusTransform::half_turn() * shift * align * center;
  return {t, forward.inverse()};
}

LieVector moment_vector(const BidiskPoint& p) {
  const SliceReduction r = slice_reduce(p);
  if (r.t == 0.0) return {};
  return adjoint(r.g, mu_slice(r.t) * LieVector::xi());
}

complex elliptic_fixed_point(const LieVector& y) {
  // Zero of the vector field (c - ib) + 2ia z - (c + ib) z^2 inside the disk:
  // z = i (a - omega) / B = i conj(B) / (a + omega), B = c + ib.
  const SpectralClass cls = classify(y);
  if (!cls.is_elliptic()) throw std::domain_error("elliptic_fixed_point: element is not elliptic");
  const double sign = y.a > 0.0 ? 1.0 : -1.0;
  const complex b_coef(y.c, y.b);
  return complex(0.0, sign) * std::conj(b_coef) / (std::abs(y.a) + cls.omega);
}

BidiskPoint moment_preimage(const LieVector& y) {
  const SpectralClass cls = classify(y);
  if (cls.tag == SpectralTag::zero) return {};
  if (cls.tag != SpectralTag::elliptic_positive) {
    throw std::domain_error("moment_preimage: target is outside the positive elliptic cone");
  }
  const MobiusTransform h = MobiusTransform::translation(elliptic_fixed_point(y)).inverse();
  return act_bidisk(h, slice_point(mu_slice_invert(cls.omega)));
}

}  // namespace su11
