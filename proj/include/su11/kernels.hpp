#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace su11::kernels {

/// out[i] = f(xs[i]), single-threaded reference.
template <class F>
std::vector<double> map_serial(std::span<const double> xs, F&& f) {
  std::vector<double> out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) out[i] = f(xs[i]);
  return out;
}

/// out[i] = f(xs[i]) with the loop split across OpenMP threads. Each entry
/// depends on its own input only, so the result matches map_serial exactly.
template <class F>
std::vector<double> map_parallel(std::span<const double> xs, F&& f) {
  std::vector<double> out(xs.size());
  const auto n = static_cast<std::ptrdiff_t>(xs.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = f(xs[static_cast<std::size_t>(i)]);
  return out;
}

}  // namespace su11::kernels
