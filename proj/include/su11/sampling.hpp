#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "su11/weights.hpp"

namespace su11 {

/// How n samples are split into independently seeded substreams. The layout,
/// not the thread count, determines every sample value.
struct StreamLayout {
  static constexpr std::size_t kDefaultStreams = 64;

  std::uint64_t seed = 0;
  std::size_t stream_count = kDefaultStreams;
  std::size_t total = 0;

  std::size_t stream_size(std::size_t stream) const;
  std::size_t stream_offset(std::size_t stream) const;
};

/// Per-stream engine seeded through splitmix64 of (seed, stream index).
std::mt19937_64 stream_engine(std::uint64_t seed, std::size_t stream);

/// Uniform double in [0, 1) from the top 53 bits of one engine draw.
inline double uniform01(std::mt19937_64& engine) { return static_cast<double>(engine() >> 11) * 0x1.0p-53; }

struct SampleBatch {
  std::uint64_t seed = 0;
  std::size_t stream_count = 0;
  std::vector<std::size_t> per_stream;
  std::vector<double> omega;
  /// Importance weight w(rho) of each sample; exactly 1 for the uniform
  /// ensemble.
  std::vector<double> weight;

  std::size_t size() const { return omega.size(); }
};

/// Draws n pairs (z, w) uniformly from the bidisk (polar method, r = sqrt U)
/// and records omega together with the importance weight for `weight`.
SampleBatch mc_sample(std::size_t n, std::uint64_t seed, const WeightSpec& weight,
                      std::size_t stream_count = StreamLayout::kDefaultStreams);

namespace kernels {

/// Single-threaded reference for mc_sample.
SampleBatch mc_sample_serial(const StreamLayout& layout, const WeightSpec& weight);
/// OpenMP version; bitwise identical to the serial reference.
SampleBatch mc_sample_parallel(const StreamLayout& layout, const WeightSpec& weight);

}  // namespace kernels

}  // namespace su11
