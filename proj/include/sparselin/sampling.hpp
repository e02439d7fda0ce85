#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace sparselin {

/// splitmix64 (Vigna). Part of the reproducibility contract: the same seed
/// yields the same stream on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// Uniform indices in [0, m), drawn with replacement as
/// floor(m * (u >> 11) * 2^-53) for successive splitmix64 outputs u.
class IndexSampler {
 public:
  /// Throws EmptyDatasetError if m == 0.
  IndexSampler(std::uint64_t seed, std::size_t m);

  std::size_t next() noexcept;

 private:
  SplitMix64 rng_;
  std::size_t m_;
};

/// The first T indices of IndexSampler(seed, m).
std::vector<std::size_t> draw_indices(std::uint64_t seed, std::uint64_t steps, std::size_t m);

}  // namespace sparselin
