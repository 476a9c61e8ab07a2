#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "oracles.hpp"
#include "regress_bench/cross_validation.hpp"
#include "regress_bench/error.hpp"

using namespace regress_bench;

TEST_CASE("fold sizes for small examples") {
  auto sizes = [](std::size_t n, std::size_t k) {
    std::vector<std::size_t> out;
    for (const auto& f : kfold_indices(n, k, 42)) out.push_back(f.size());
    return out;
  };
  CHECK(sizes(10, 3) == std::vector<std::size_t>{4, 3, 3});
  CHECK(sizes(10, 5) == std::vector<std::size_t>{2, 2, 2, 2, 2});
  CHECK(sizes(7, 7) == std::vector<std::size_t>(7, 1));
  CHECK(sizes(1017, 10) == std::vector<std::size_t>{102, 102, 102, 102, 102, 102, 102, 101, 101, 101});
}

TEST_CASE("folds partition the rows for every k") {
  for (std::size_t n = 2; n <= 200; n += 7) {
    for (std::size_t k = 2; k <= n; k += std::max<std::size_t>(1, n / 9)) {
      auto folds = kfold_indices(n, k, n * 31 + k);
      REQUIRE(folds.size() == k);
      std::vector<std::size_t> all;
      std::size_t lo = n, hi = 0;
      for (const auto& f : folds) {
        lo = std::min(lo, f.size());
        hi = std::max(hi, f.size());
        all.insert(all.end(), f.begin(), f.end());
      }
      CHECK(hi - lo <= 1);
      std::sort(all.begin(), all.end());
      std::vector<std::size_t> expect(n);
      std::iota(expect.begin(), expect.end(), 0);
      CHECK(all == expect);
    }
  }
}

TEST_CASE("fold assignment depends only on the seed") {
  CHECK(kfold_indices(100, 10, 5) == kfold_indices(100, 10, 5));
  CHECK(kfold_indices(100, 10, 5) != kfold_indices(100, 10, 6));
}

TEST_CASE("k outside [2, n] is rejected") {
  for (auto [n, k] : {std::pair<std::size_t, std::size_t>{10, 1}, {10, 0}, {10, 11}, {1, 2}}) {
    try {
      kfold_indices(n, k, 1);
      FAIL("expected BadK");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::BadK);
    }
  }
  const Matrix x{{1.0}, {2.0}, {3.0}};
  const Vector y{1.0, 2.0, 4.0};
  CHECK_THROWS_AS(cross_validate({ModelKind::LinearRegression}, x, y, 4, 1), Error);
}

TEST_CASE("leave-one-out on five rows yields a well-formed report") {
  const Matrix x{{1.0, 0.0}, {2.0, 1.0}, {3.0, 0.0}, {4.0, 1.0}, {5.0, 0.0}};
  const Vector y{1.0, 3.0, 2.0, 5.0, 4.0};
  ModelSpec spec{ModelKind::GradientBoosting};
  spec.gbm = {1, 1.0, 5, 1};
  auto rep = cross_validate(spec, x, y, 5, 42);
  CHECK(rep.k == 5);
  CHECK(rep.seed == 42);
  REQUIRE(rep.folds.size() == 5);
  for (const auto& f : rep.folds) {
    CHECK(f.size == 1);
    CHECK(std::isnan(f.r2));
    CHECK(std::isfinite(f.rmse));
    CHECK(f.tss == 0.0);
  }
  CHECK(std::isnan(rep.weighted_mean_r2));
}

TEST_CASE("weighted mean equals plain mean for equal fold sizes") {
  std::vector<FoldScore> folds{{10, 0.5, 0, 0, 1}, {10, 0.7, 0, 0, 1}, {10, 0.9, 0, 0, 1}};
  CHECK(weighted_mean_r2(folds) == doctest::Approx(0.7).epsilon(1e-15));
  folds.push_back({20, 0.1, 0, 0, 1});
  CHECK(weighted_mean_r2(folds) == doctest::Approx((10 * 2.1 + 20 * 0.1) / 50).epsilon(1e-15));
  folds.push_back({5, std::nan(""), 0, 0, 0});
  CHECK(weighted_mean_r2(folds) == doctest::Approx((10 * 2.1 + 20 * 0.1) / 50).epsilon(1e-15));
}

TEST_CASE("cv on a linear signal is near perfect and matches fold metrics") {
  oracle::Rng rng(10);
  auto x = oracle::random_matrix(rng, 120, 3, -1, 1);
  Vector y(120);
  for (std::size_t r = 0; r < 120; ++r) y[r] = 3 * x(r, 0) - x(r, 1) + 0.5 * x(r, 2) + 7;
  auto rep = cross_validate({ModelKind::LinearRegression}, x, y, 10, 3);
  for (const auto& f : rep.folds) {
    CHECK(f.r2 == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(f.mse == doctest::Approx(f.rmse * f.rmse).epsilon(1e-9));
  }
  CHECK(rep.weighted_mean_r2 == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(cross_validate({ModelKind::LinearRegression}, x, y, 10, 3).folds.size() == 10);
}

TEST_CASE("fit failures name the fold") {
  // Second column is zero on all but one row, so a fold that holds that row
  // out leaves a rank-deficient training matrix.
  Matrix x(6, 2);
  Vector y(6);
  for (std::size_t r = 0; r < 6; ++r) {
    x(r, 0) = static_cast<double>(r);
    x(r, 1) = r == 3 ? 1.0 : 0.0;
    y[r] = static_cast<double>(r * r);
  }
  try {
    cross_validate({ModelKind::LinearRegression}, x, y, 3, 1);
    FAIL("expected RankDeficient");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RankDeficient);
    CHECK(std::string(e.what()).find("fold ") != std::string::npos);
  }
}
