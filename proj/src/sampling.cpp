#include "su11/sampling.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "su11/moment_map.hpp"

namespace su11 {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

complex uniform_disk_point(std::mt19937_64& engine) {
  const double r = std::sqrt(uniform01(engine));
  const double theta = 2.0 * std::numbers::pi * uniform01(engine);
  return std::polar(r, theta);
}

void fill_stream(const StreamLayout& layout, std::size_t stream, const WeightSpec& weight, SampleBatch& batch) {
  std::mt19937_64 engine = stream_engine(layout.seed, stream);
  const std::size_t begin = layout.stream_offset(stream);
  const std::size_t end = begin + layout.stream_size(stream);
  for (std::size_t i = begin; i < end; ++i) {
    const complex z = uniform_disk_point(engine);
    const complex w = uniform_disk_point(engine);
    const double omega = omega_of_pair(z, w);
    batch.omega[i] = omega;
    batch.weight[i] = weight.is_uniform() ? 1.0 : weight(2.0 * std::asinh(0.25 * omega));
  }
}

SampleBatch empty_batch(const StreamLayout& layout) {
  if (layout.total == 0) throw std::invalid_argument("mc_sample: n must be at least 1");
  if (layout.stream_count == 0) throw std::invalid_argument("mc_sample: stream_count must be at least 1");
  SampleBatch batch;
  batch.seed = layout.seed;
  batch.stream_count = layout.stream_count;
  batch.per_stream.resize(layout.stream_count);
  for (std::size_t s = 0; s < layout.stream_count; ++s) batch.per_stream[s] = layout.stream_size(s);
  batch.omega.assign(layout.total, 0.0);
  batch.weight.assign(layout.total, 0.0);
  return batch;
}

}  // namespace

std::size_t StreamLayout::stream_size(std::size_t stream) const {
  return total / stream_count + (stream < total % stream_count ? 1 : 0);
}

std::size_t StreamLayout::stream_offset(std::size_t stream) const {
  const std::size_t base = total / stream_count;
  const std::size_t extra = total % stream_count;
  return stream * base + (stream < extra ? stream : extra);
}

std::mt19937_64 stream_engine(std::uint64_t seed, std::size_t stream) {
  const std::uint64_t key = splitmix64(seed) ^ splitmix64(0x5bd1e995ULL + static_cast<std::uint64_t>(stream));
  return std::mt19937_64(splitmix64(key));
}

namespace kernels {

SampleBatch mc_sample_serial(const StreamLayout& layout, const WeightSpec& weight) {
  SampleBatch batch = empty_batch(layout);
  for (std::size_t s = 0; s < layout.stream_count; ++s) fill_stream(layout, s, weight, batch);
  return batch;
}

SampleBatch mc_sample_parallel(const StreamLayout& layout, const WeightSpec& weight) {
  SampleBatch batch = empty_batch(layout);
  const auto streams = static_cast<std::ptrdiff_t>(layout.stream_count);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t s = 0; s < streams; ++s) fill_stream(layout, static_cast<std::size_t>(s), weight, batch);
  return batch;
}

}  // namespace kernels

SampleBatch mc_sample(std::size_t n, std::uint64_t seed, const WeightSpec& weight, std::size_t stream_count) {
  return kernels::mc_sample_parallel({seed, stream_count, n}, weight);
}

}  // namespace su11
