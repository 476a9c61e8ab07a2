#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "regress_bench/error.hpp"
#include "regress_bench/tree.hpp"

using namespace regress_bench;

namespace {

void check_invariants(const RegressionTree& t, const TreeParams& p) {
  CHECK(t.depth() <= p.max_depth);
  // Too few rows for even one leaf of the requested size: only the root.
  if (t.nodes().front().n_samples < static_cast<std::size_t>(p.min_samples_leaf)) {
    CHECK(t.nodes().size() == 1);
    return;
  }
  for (const auto& n : t.nodes())
    if (n.is_leaf()) CHECK(n.n_samples >= static_cast<std::size_t>(p.min_samples_leaf));
}

}  // namespace

TEST_CASE("depth zero is a single mean leaf") {
  auto t = tree_fit(Matrix{{0.0}, {1.0}, {2.0}}, Vector{1.0, 2.0, 6.0}, {0, 1});
  REQUIRE(t.nodes().size() == 1);
  CHECK(t.nodes()[0].value == 3.0);
  CHECK(tree_predict(t, Matrix{{-5.0}, {9.0}}) == Vector{3.0, 3.0});
}

TEST_CASE("one split separates the step function") {
  const Matrix x{{0.0}, {1.0}, {2.0}, {3.0}};
  auto t = tree_fit(x, Vector{0, 0, 10, 10}, {1, 1});
  REQUIRE(t.nodes().size() == 3);
  CHECK(t.nodes()[0].feature == 0);
  CHECK(t.nodes()[0].threshold == 1.5);
  CHECK(tree_predict(t, Matrix{{1.5}, {2.5}}) == Vector{0.0, 10.0});
  // exactly on the threshold routes left
  CHECK(tree_predict(t, Matrix{{1.5}})[0] == 0.0);
  CHECK(tree_predict(t, Matrix{{std::nextafter(1.5, 2.0)}})[0] == 10.0);
}

TEST_CASE("constant targets never split") {
  oracle::Rng rng(2);
  auto x = oracle::random_matrix(rng, 30, 3, 0, 1);
  auto t = tree_fit(x, Vector(30, 0.3), {6, 1});
  CHECK(t.nodes().size() == 1);
  CHECK(t.n_leaves() == 1);
}

TEST_CASE("tie-break prefers lowest feature then smallest threshold") {
  // Both features induce the same partition.
  const Matrix x{{0.0, 0.0}, {1.0, 1.0}, {2.0, 2.0}, {3.0, 3.0}};
  auto t = tree_fit(x, Vector{0, 0, 10, 10}, {1, 1});
  CHECK(t.nodes()[0].feature == 0);
  // Symmetric gains at thresholds 0.5 and 2.5 on one feature.
  auto u = tree_fit(Matrix{{0.0}, {1.0}, {2.0}, {3.0}}, Vector{5, 0, 0, 5}, {1, 1});
  CHECK(u.nodes()[0].threshold == 0.5);
}

TEST_CASE("min_samples_leaf and max_depth are respected") {
  oracle::Rng rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = static_cast<std::size_t>(rng.integer(1, 60));
    auto x = oracle::random_matrix(rng, n, 3, -1, 1);
    Vector y(n);
    for (auto& v : y) v = rng.uniform(-1, 1);
    TreeParams p{rng.integer(0, 6), rng.integer(1, 8)};
    check_invariants(tree_fit(x, y, p), p);
  }
}

TEST_CASE("root split equals the exhaustive best split") {
  oracle::Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(rng.integer(2, 12));
    const auto d = static_cast<std::size_t>(rng.integer(1, 2));
    Matrix x(n, d);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < d; ++c) x(r, c) = rng.integer(0, 5);  // duplicates on purpose
    Vector y(n);
    for (auto& v : y) v = rng.uniform(-3, 3);
    const int min_leaf = rng.integer(1, 3);

    auto brute = oracle::exhaustive_best_split(x, y, min_leaf);
    auto t = tree_fit(x, y, {1, min_leaf});
    if (brute.feature < 0) {
      CHECK(t.nodes().size() == 1);
      continue;
    }
    REQUIRE(t.nodes().size() == 3);
    const auto& root = t.nodes()[0];
    Vector left, right;
    for (std::size_t r = 0; r < n; ++r)
      (x(r, static_cast<std::size_t>(root.feature)) <= root.threshold ? left : right).push_back(y[r]);
    const double gain = oracle::sse(y) - oracle::sse(left) - oracle::sse(right);
    CHECK(gain == doctest::Approx(brute.gain).epsilon(1e-9));
  }
}

TEST_CASE("tree errors") {
  CHECK_THROWS_AS(tree_fit(Matrix{{1.0}}, Vector{1.0, 2.0}, {}), Error);
  auto t = tree_fit(Matrix{{1.0}, {2.0}}, Vector{1.0, 2.0}, {});
  try {
    tree_predict(t, Matrix{{1.0, 2.0}});
    FAIL("expected DimensionMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DimensionMismatch);
  }
}
