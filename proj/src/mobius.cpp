#include "su11/mobius.hpp"

#include <cmath>
#include <stdexcept>

namespace su11 {

MobiusTransform::MobiusTransform(complex alpha, complex beta) : alpha_(alpha), beta_(beta) {
  const double scale = std::norm(alpha) + std::norm(beta);
  if (!std::isfinite(scale) || std::abs(determinant() - 1.0) > 1e-12 * scale) {
    throw std::invalid_argument("MobiusTransform: |alpha|^2 - |beta|^2 must equal 1");
  }
}

MobiusTransform MobiusTransform::translation(complex zeta) {
  const double r2 = std::norm(zeta);
  if (!(r2 < 1.0)) throw std::domain_error("MobiusTransform::translation: |zeta| must be < 1");
  const double s = 1.0 / std::sqrt((1.0 - std::abs(zeta)) * (1.0 + std::abs(zeta)));
  return unchecked(s, -s * zeta);
}

MobiusTransform MobiusTransform::rotation(double angle) {
  return unchecked(std::polar(1.0, 0.5 * angle), 0.0);
}

MobiusTransform MobiusTransform::exp(const LieVector& x) {
  // For trace-free M, M^2 = b(x,x) I, so exp(M) = C(q) I + S(q) M with
  // C, S the even functions cosh(sqrt q), sinh(sqrt q)/sqrt q.
  const double q = bform(x, x);
  double c = 0.0;
  double s = 0.0;
  if (std::abs(q) < 1e-8) {
    c = 1.0 + q / 2.0 + q * q / 24.0;
    s = 1.0 + q / 6.0 + q * q / 120.0;
  } else if (q > 0.0) {
    const double l = std::sqrt(q);
    c = std::cosh(l);
    s = std::sinh(l) / l;
  } else {
    const double w = std::sqrt(-q);
    c = std::cos(w);
    s = std::sin(w) / w;
  }
  const Matrix2c m = x.matrix();
  const complex alpha = c + s * m.m00;
  const complex beta = s * m.m01;
  const double d = std::norm(alpha) - std::norm(beta);
  const double k = 1.0 / std::sqrt(d);
  return unchecked(k * alpha, k * beta);
}

MobiusTransform operator*(const MobiusTransform& g, const MobiusTransform& h) {
  const complex alpha = g.alpha_ * h.alpha_ + g.beta_ * std::conj(h.beta_);
  const complex beta = g.alpha_ * h.beta_ + g.beta_ * std::conj(h.alpha_);
  const double d = std::norm(alpha) - std::norm(beta);
  const double k = 1.0 / std::sqrt(d);
  return MobiusTransform::unchecked(k * alpha, k * beta);
}

LieVector adjoint(const MobiusTransform& g, const LieVector& x) {
  return LieVector::from_matrix(g.matrix() * x.matrix() * g.inverse().matrix());
}

}  // namespace su11
