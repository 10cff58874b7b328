#pragma once

#include "su11/lie.hpp"

namespace su11 {

/// Element [[alpha, beta], [conj(beta), conj(alpha)]] of SU(1,1), acting on
/// the unit disk by z -> (alpha z + beta) / (conj(beta) z + conj(alpha)).
class MobiusTransform {
 public:
  MobiusTransform() = default;

  /// Throws std::invalid_argument unless |alpha|^2 - |beta|^2 = 1 to 1e-12
  /// relative to |alpha|^2 + |beta|^2.
  MobiusTransform(complex alpha, complex beta);

  static MobiusTransform identity() { return {}; }

  /// T_zeta(z) = (z - zeta) / (1 - conj(zeta) z); requires |zeta| < 1.
  static MobiusTransform translation(complex zeta);

  /// z -> e^{i angle} z.
  static MobiusTransform rotation(double angle);

  /// z -> -z, with exact coefficients.
  static MobiusTransform half_turn() { return {complex(0.0, 1.0), 0.0}; }

  /// Group exponential exp(x) of a Lie algebra element.
  static MobiusTransform exp(const LieVector& x);

  complex alpha() const { return alpha_; }
  complex beta() const { return beta_; }
  double determinant() const { return std::norm(alpha_) - std::norm(beta_); }

  Matrix2c matrix() const { return {alpha_, beta_, std::conj(beta_), std::conj(alpha_)}; }

  complex apply(complex z) const { return (alpha_ * z + beta_) / (std::conj(beta_) * z + std::conj(alpha_)); }
  complex operator()(complex z) const { return apply(z); }

  MobiusTransform inverse() const { return unchecked(std::conj(alpha_), -beta_); }

  /// Composition: (g * h)(z) = g(h(z)). The product is rescaled onto the
  /// group so long chains do not drift off det = 1.
  friend MobiusTransform operator*(const MobiusTransform& g, const MobiusTransform& h);

 private:
  static MobiusTransform unchecked(complex alpha, complex beta) {
    MobiusTransform g;
    g.alpha_ = alpha;
    g.beta_ = beta;
    return g;
  }

  complex alpha_{1.0, 0.0};
  complex beta_{0.0, 0.0};
};

/// Adjoint action g x g^{-1}.
LieVector adjoint(const MobiusTransform& g, const LieVector& x);

}  // namespace su11
