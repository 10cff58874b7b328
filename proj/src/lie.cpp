#include "su11/lie.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace su11 {

Matrix2c operator*(const Matrix2c& x, const Matrix2c& y) {
  return {x.m00 * y.m00 + x.m01 * y.m10, x.m00 * y.m01 + x.m01 * y.m11,
          x.m10 * y.m00 + x.m11 * y.m10, x.m10 * y.m01 + x.m11 * y.m11};
}

Matrix2c operator+(const Matrix2c& x, const Matrix2c& y) {
  return {x.m00 + y.m00, x.m01 + y.m01, x.m10 + y.m10, x.m11 + y.m11};
}

Matrix2c operator-(const Matrix2c& x, const Matrix2c& y) {
  return {x.m00 - y.m00, x.m01 - y.m01, x.m10 - y.m10, x.m11 - y.m11};
}

Matrix2c operator*(complex s, const Matrix2c& x) { return {s * x.m00, s * x.m01, s * x.m10, s * x.m11}; }

Matrix2c LieVector::matrix() const {
  const complex i(0.0, 1.0);
  return {i * a, c - i * b, c + i * b, -i * a};
}

LieVector LieVector::from_matrix(const Matrix2c& m) {
  // m00 = ia, m11 = -ia, m01 = c - ib, m10 = c + ib
  return {0.5 * (m.m00 - m.m11).imag(), 0.5 * (m.m10 - m.m01).imag(), 0.5 * (m.m01 + m.m10).real()};
}

double LieVector::norm_inf() const { return std::max({std::abs(a), std::abs(b), std::abs(c)}); }

bool approx_equal(const LieVector& x, const LieVector& y, double tol) { return (x - y).norm_inf() <= tol; }

double bform(const LieVector& x, const LieVector& y) { return -x.a * y.a + x.b * y.b + x.c * y.c; }

LieVector bracket(const LieVector& x, const LieVector& y) {
  const Matrix2c mx = x.matrix();
  const Matrix2c my = y.matrix();
  return LieVector::from_matrix(mx * my - my * mx);
}

SymplecticGenerator SymplecticGenerator::from_matrix(double m00, double m01, double m10, double m11) {
  const double scale = std::max({1.0, std::abs(m00), std::abs(m11)});
  if (std::abs(m00 + m11) > 1e-12 * scale) {
    throw std::invalid_argument("SymplecticGenerator: matrix is not trace-free");
  }
  const double A = 0.5 * (m00 - m11);
  return {A, -m01, m10};
}

SymplecticGenerator to_sp2(const LieVector& x) {
  // K X K^{-1} = [[-b, a + c], [c - a, b]]
  return SymplecticGenerator::from_matrix(-x.b, x.a + x.c, x.c - x.a, x.b);
}

LieVector from_sp2(const SymplecticGenerator& s) {
  const double m01 = s.m01();
  const double m10 = s.m10();
  return {0.5 * (m01 - m10), -s.A, 0.5 * (m01 + m10)};
}

std::string_view to_string(SpectralTag tag) {
  switch (tag) {
    case SpectralTag::elliptic_positive: return "elliptic-positive";
    case SpectralTag::elliptic_negative: return "elliptic-negative";
    case SpectralTag::zero: return "zero";
    case SpectralTag::non_elliptic: return "non-elliptic";
  }
  return "unknown";
}

SpectralClass classify(const LieVector& x) {
  if (x.norm_inf() < kZeroThreshold) return {SpectralTag::zero, 0.0};
  const double q = bform(x, x);
  if (q < 0.0) {
    const double omega = std::sqrt(-q);
    return {x.a > 0.0 ? SpectralTag::elliptic_positive : SpectralTag::elliptic_negative, omega};
  }
  return {SpectralTag::non_elliptic, 0.0};
}

}  // namespace su11
