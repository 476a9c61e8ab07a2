#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace regress_bench {

inline constexpr std::uint64_t kDefaultSeed = 42;

// Permutation of 0..n-1 from a seeded mt19937_64 and a Fisher-Yates pass
// with rejection sampling, so the result is identical on every platform
// (std::shuffle and std::uniform_int_distribution are not).
std::vector<std::size_t> shuffled_indices(std::size_t n, std::uint64_t seed);

}  // namespace regress_bench
