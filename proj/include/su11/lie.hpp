#pragma once

#include <complex>
#include <string_view>

namespace su11 {

using complex = std::complex<double>;

/// Row-major 2x2 complex matrix.
struct Matrix2c {
  complex m00, m01, m10, m11;

  static Matrix2c identity() { return {1.0, 0.0, 0.0, 1.0}; }

  complex trace() const { return m00 + m11; }
  complex determinant() const { return m00 * m11 - m01 * m10; }
  Matrix2c adjoint() const { return {std::conj(m00), std::conj(m10), std::conj(m01), std::conj(m11)}; }
};

Matrix2c operator*(const Matrix2c& x, const Matrix2c& y);
Matrix2c operator+(const Matrix2c& x, const Matrix2c& y);
Matrix2c operator-(const Matrix2c& x, const Matrix2c& y);
Matrix2c operator*(complex s, const Matrix2c& x);

/// Element a*xi + b*eta + c*zeta of su(1,1), with
///   xi = i diag(1,-1),  eta = i [[0,-1],[1,0]],  zeta = [[0,1],[1,0]].
/// The coefficient triple is the canonical representation; the matrix is
/// built on demand.
struct LieVector {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  static constexpr LieVector xi() { return {1.0, 0.0, 0.0}; }
  static constexpr LieVector eta() { return {0.0, 1.0, 0.0}; }
  static constexpr LieVector zeta() { return {0.0, 0.0, 1.0}; }

  Matrix2c matrix() const;

  /// Projects a 2x2 complex matrix onto the basis. Exact for matrices in
  /// su(1,1); for anything else returns the b-orthogonal projection of the
  /// su(1,1)-part.
  static LieVector from_matrix(const Matrix2c& m);

  double norm_inf() const;

  friend constexpr LieVector operator+(LieVector x, LieVector y) { return {x.a + y.a, x.b + y.b, x.c + y.c}; }
  friend constexpr LieVector operator-(LieVector x, LieVector y) { return {x.a - y.a, x.b - y.b, x.c - y.c}; }
  friend constexpr LieVector operator*(double s, LieVector x) { return {s * x.a, s * x.b, s * x.c}; }
  friend constexpr bool operator==(const LieVector&, const LieVector&) = default;
};

/// Componentwise comparison with absolute tolerance.
bool approx_equal(const LieVector& x, const LieVector& y, double tol = 1e-12);

/// Invariant form b(x,y) = Tr(xy)/2; signature (-,+,+) in {xi, eta, zeta}.
double bform(const LieVector& x, const LieVector& y);

/// Lie bracket [x,y] = xy - yx.
LieVector bracket(const LieVector& x, const LieVector& y);

/// Real form of su(1,1) in sp_2(R): [[A, -B], [C, -A]].
struct SymplecticGenerator {
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;

  double m00() const { return A; }
  double m01() const { return -B; }
  double m10() const { return C; }
  double m11() const { return -A; }

  /// Builds from a real trace-free 2x2 matrix; throws std::invalid_argument
  /// otherwise.
  static SymplecticGenerator from_matrix(double m00, double m01, double m10, double m11);
};

/// Cayley conjugation X -> K X K^{-1} with K = (1/sqrt 2) [[1, i], [i, 1]].
/// Images of the basis:
///   xi   -> [[0, 1], [-1, 0]]
///   eta  -> [[-1, 0], [0, 1]]
///   zeta -> [[0, 1], [1, 0]]
SymplecticGenerator to_sp2(const LieVector& x);
LieVector from_sp2(const SymplecticGenerator& s);

enum class SpectralTag { elliptic_positive, elliptic_negative, zero, non_elliptic };

std::string_view to_string(SpectralTag tag);

/// Spectral type of an element. For elliptic tags the eigenvalues are
/// +-i*omega; omega is 0 otherwise.
struct SpectralClass {
  SpectralTag tag = SpectralTag::zero;
  double omega = 0.0;

  bool is_elliptic() const {
    return tag == SpectralTag::elliptic_positive || tag == SpectralTag::elliptic_negative;
  }
};

/// Below this sup-norm an element is the cone vertex.
inline constexpr double kZeroThreshold = 1e-13;

SpectralClass classify(const LieVector& x);

}  // namespace su11
