#include "regress_bench/random.hpp"

#include <numeric>
#include <random>

namespace regress_bench {

namespace {

std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t bound) {
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
  std::uint64_t r = gen();
  while (r >= limit) r = gen();
  return r % bound;
}

}  // namespace

std::vector<std::size_t> shuffled_indices(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::mt19937_64 gen(seed);
  for (std::size_t i = n; i > 1; --i) {
    auto j = static_cast<std::size_t>(uniform_below(gen, i));
    std::swap(idx[i - 1], idx[j]);
  }
  return idx;
}

}  // namespace regress_bench
