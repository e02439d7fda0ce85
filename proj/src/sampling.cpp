#include "sparselin/sampling.hpp"

#include <algorithm>

#include "sparselin/errors.hpp"

namespace sparselin {

IndexSampler::IndexSampler(std::uint64_t seed, std::size_t m) : rng_(seed), m_(m) {
  if (m == 0) throw EmptyDatasetError("cannot sample indices from an empty dataset");
}

std::size_t IndexSampler::next() noexcept {
  const double unit = static_cast<double>(rng_.next() >> 11) * 0x1.0p-53;
  const auto idx = static_cast<std::size_t>(static_cast<double>(m_) * unit);
  // m * unit can round up to m for very large m.
  return std::min(idx, m_ - 1);
}

std::vector<std::size_t> draw_indices(std::uint64_t seed, std::uint64_t steps, std::size_t m) {
  IndexSampler sampler(seed, m);
  std::vector<std::size_t> out;
  out.reserve(steps);
  for (std::uint64_t t = 0; t < steps; ++t) out.push_back(sampler.next());
  return out;
}

}  // namespace sparselin
