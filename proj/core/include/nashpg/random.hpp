#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace nashpg {

// Derives an independent stream seed from (seed, stream). splitmix64 finalizer.
inline std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Uniform double in [0, 1). Bit-reproducible across standard libraries,
// unlike std::uniform_real_distribution.
inline double uniform_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Samples an index from an unnormalized weight vector by cumulative scan.
// Falls back to the last positive-weight index on accumulated rounding.
inline int sample_index(std::span<const double> weights, std::mt19937_64& rng) {
  double total = 0.0;
  for (double w : weights) total += w;
  double u = uniform_double(rng) * total;
  double cum = 0.0;
  int last = 0;
  for (int i = 0; i < static_cast<int>(weights.size()); ++i) {
    if (weights[i] <= 0.0) continue;
    cum += weights[i];
    last = i;
    if (u < cum) return i;
  }
  return last;
}

}  // namespace nashpg
