#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "regress_bench/error.hpp"
#include "regress_bench/metrics.hpp"

using namespace regress_bench;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Io;
}

}  // namespace

TEST_CASE("worked metric examples") {
  // RSS = 0.10, TSS = 5.
  CHECK(r_squared(Vector{1, 2, 3, 4}, Vector{1.1, 1.9, 3.2, 3.8}) == doctest::Approx(0.98).epsilon(1e-12));

  const Vector y{1, 2, 3, 4, 5};
  const Vector p{1.1, 1.9, 3.2, 3.8, 5.0};
  // RSS = 0.01 + 0.01 + 0.04 + 0.04 = 0.10, TSS = 10.
  CHECK(r_squared(y, p) == doctest::Approx(0.99).epsilon(1e-12));
  CHECK(r_squared(y, y) == 1.0);

  const Vector zeros{0, 0};
  const Vector obs{3, 4};
  CHECK(mse(obs, zeros) == 12.5);
  CHECK(rmse(obs, zeros) == doctest::Approx(std::sqrt(12.5)).epsilon(1e-15));

  const Vector mean_pred(5, 3.0);
  CHECK(r_squared(y, mean_pred) == 0.0);
}

TEST_CASE("metric identities on random data") {
  oracle::Rng rng(33);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(rng.integer(2, 60));
    Vector y(n), p(n);
    for (std::size_t i = 0; i < n; ++i) {
      y[i] = rng.uniform(-1000, 1000);
      p[i] = y[i] + rng.uniform(-300, 300);
    }
    const double e = rmse(y, p);
    CHECK(std::abs(mse(y, p) - e * e) <= 1e-12 * std::max(1.0, e * e));

    const double tss = total_sum_squares(y);
    CHECK(r_squared(y, p) == doctest::Approx(1.0 - static_cast<double>(n) * e * e / tss).epsilon(1e-9));

    // Shifting both vectors leaves the metrics unchanged.
    const double c = rng.uniform(-1e4, 1e4);
    Vector ys = y, ps = p;
    for (std::size_t i = 0; i < n; ++i) {
      ys[i] += c;
      ps[i] += c;
    }
    CHECK(r_squared(ys, ps) == doctest::Approx(r_squared(y, p)).epsilon(1e-6));
    CHECK(rmse(ys, ps) == doctest::Approx(e).epsilon(1e-6));

    auto s = score(y, p);
    CHECK(s.r2 == r_squared(y, p));
    CHECK(s.rmse == e);
  }
}

TEST_CASE("metric errors") {
  const Vector a{1, 2, 3};
  const Vector b{1, 2};
  const Vector one{1};
  const Vector flat{2, 2, 2};
  CHECK(kind_of([&] { r_squared(a, b); }) == ErrorKind::DimensionMismatch);
  CHECK(kind_of([&] { r_squared(one, one); }) == ErrorKind::DimensionMismatch);
  CHECK(kind_of([&] { r_squared(flat, a); }) == ErrorKind::ZeroVariance);
  CHECK(kind_of([&] { rmse(a, b); }) == ErrorKind::DimensionMismatch);
  CHECK(kind_of([&] { rmse(Vector{}, Vector{}); }) == ErrorKind::EmptyInput);
}
