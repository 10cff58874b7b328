#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

namespace su11 {

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;
  int evaluations = 0;
  bool converged = true;
};

namespace detail {

// Gauss-Kronrod 7/15 nodes on [-1, 1] (symmetric half, centre last).
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b, value, error;
};

template <class F>
Segment gauss_kronrod_15(F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kKronrodWeights[7];
  double gauss = fc * kGaussWeights[3];
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    const double sum = f(center - dx) + f(center + dx);
    kronrod += kKronrodWeights[j] * sum;
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * sum;
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod (7/15) quadrature over consecutive
/// breakpoints. Stops once the summed error estimate is at most
/// max(abs_tol, rel_tol * |value|); the segment with the largest error is
/// bisected first, so the evaluation order is deterministic.
template <class F>
QuadratureResult integrate(F&& f, const std::vector<double>& breakpoints, double abs_tol, double rel_tol,
                           int max_segments = 4000) {
  std::vector<detail::Segment> segments;
  segments.reserve(static_cast<std::size_t>(max_segments) + breakpoints.size());
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (breakpoints[i + 1] > breakpoints[i]) segments.push_back(detail::gauss_kronrod_15(f, breakpoints[i], breakpoints[i + 1]));
  }
  QuadratureResult result;
  result.evaluations = 15 * static_cast<int>(segments.size());
  auto by_error = [](const detail::Segment& x, const detail::Segment& y) { return x.error < y.error; };
  std::make_heap(segments.begin(), segments.end(), by_error);
  while (true) {
    double value = 0.0;
    double error = 0.0;
    for (const auto& s : segments) {
      value += s.value;
      error += s.error;
    }
    result.value = value;
    result.abs_error = error;
    if (error <= std::max(abs_tol, rel_tol * std::abs(value))) break;
    if (static_cast<int>(segments.size()) >= max_segments || segments.empty()) {
      result.converged = false;
      break;
    }
    std::pop_heap(segments.begin(), segments.end(), by_error);
    const detail::Segment worst = segments.back();
    segments.pop_back();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      // Interval exhausted at machine resolution.
      segments.push_back(worst);
      std::push_heap(segments.begin(), segments.end(), by_error);
      result.converged = false;
      break;
    }
    segments.push_back(detail::gauss_kronrod_15(f, worst.a, mid));
    std::push_heap(segments.begin(), segments.end(), by_error);
    segments.push_back(detail::gauss_kronrod_15(f, mid, worst.b));
    std::push_heap(segments.begin(), segments.end(), by_error);
    result.evaluations += 30;
  }
  return result;
}

template <class F>
QuadratureResult integrate(F&& f, double a, double b, double abs_tol, double rel_tol, int max_segments = 4000) {
  return integrate(std::forward<F>(f), std::vector<double>{a, b}, abs_tol, rel_tol, max_segments);
}

}  // namespace su11
