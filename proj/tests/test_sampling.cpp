#include <doctest.h>

#include "sparselin/errors.hpp"
#include "sparselin/sampling.hpp"

using namespace sparselin;

TEST_CASE("splitmix64 reference stream") {
  // First outputs for seed 0 from the public-domain reference implementation.
  SplitMix64 rng(0);
  CHECK(rng.next() == 0xe220a8397b1dcdafULL);
  CHECK(rng.next() == 0x6e789e6aa1b965f4ULL);
  CHECK(rng.next() == 0x06c45d188009454fULL);
}

TEST_CASE("draw_indices golden sequences") {
  CHECK(draw_indices(42, 3, 10) == std::vector<std::size_t>{7, 1, 2});
  CHECK(draw_indices(7, 10, 16) == std::vector<std::size_t>{6, 0, 14, 9, 7, 3, 7, 5, 2, 6});
}

TEST_CASE("draw_indices edge cases") {
  CHECK(draw_indices(123, 5, 1) == std::vector<std::size_t>(5, 0));
  CHECK(draw_indices(123, 0, 4).empty());
  CHECK_THROWS_AS(draw_indices(1, 3, 0), EmptyDatasetError);
}

TEST_CASE("draws are in range and roughly uniform") {
  const std::size_t m = 7;
  const auto idx = draw_indices(99, 70000, m);
  std::vector<int> counts(m, 0);
  for (auto i : idx) {
    REQUIRE(i < m);
    ++counts[i];
  }
  for (int c : counts) CHECK(std::abs(c - 10000) < 500);
}

TEST_CASE("IndexSampler streams the same sequence") {
  IndexSampler sampler(5, 13);
  const auto batch = draw_indices(5, 100, 13);
  for (auto expected : batch) CHECK(sampler.next() == expected);
}
