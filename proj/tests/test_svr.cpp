#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "regress_bench/error.hpp"
#include "regress_bench/linear.hpp"
#include "regress_bench/svr.hpp"

using namespace regress_bench;

namespace {

struct Line {
  Matrix x;
  Vector y;
};

Line noise_free_line() {
  Line l{Matrix(20, 1), Vector(20)};
  for (std::size_t i = 0; i < 20; ++i) {
    l.x(i, 0) = static_cast<double>(i) * 0.5;
    l.y[i] = 2.0 * l.x(i, 0) + 1.0;
  }
  return l;
}

}  // namespace

TEST_CASE("targets inside the tube give w = 0 and zero objective") {
  // Standardized targets are 0, +-1.414, so every residual sits inside epsilon = 1.5.
  const Matrix x{{0.0}, {1.0}, {2.0}, {3.0}};
  const Vector y{10.0, 10.2, 9.8, 10.0};
  auto m = svr_fit(x, y, {1.0, 1.5, 5000, 1e-8});
  CHECK(m.w == Vector{0.0});
  CHECK(m.objective == 0.0);
  CHECK(m.converged);
  for (double p : svr_predict(m, x)) CHECK(p == doctest::Approx(m.b * m.y_std + m.y_mean));
  for (std::size_t i = 0; i < y.size(); ++i)
    CHECK(std::abs(svr_predict(m, x)[i] - y[i]) <= m.epsilon * m.y_std + 1e-12);
}

TEST_CASE("noise-free line matches the least-squares fit") {
  const auto l = noise_free_line();
  auto ols = ols_fit(l.x, l.y);
  auto m = svr_fit(l.x, l.y, {100.0, 1e-3, 5000, 1e-8});
  const double slope = m.w[0] * m.y_std;
  const double intercept = m.b * m.y_std + m.y_mean;
  CHECK(std::abs(slope - ols.coefficients[0]) < 1e-2);
  CHECK(std::abs(intercept - ols.intercept) < 1e-2);
  CHECK(svr_predict(m, Matrix{{3.0}})[0] == doctest::Approx(7.0).epsilon(1e-2));
}

TEST_CASE("multi-feature noise-free data matches least squares") {
  oracle::Rng rng(21);
  for (int trial = 0; trial < 5; ++trial) {
    auto x = oracle::random_matrix(rng, 50, 3, -3, 3);
    Vector beta{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
    Vector y(50);
    for (std::size_t r = 0; r < 50; ++r) y[r] = 4.0 + beta[0] * x(r, 0) + beta[1] * x(r, 1) + beta[2] * x(r, 2);
    auto ols = ols_fit(x, y);
    auto m = svr_fit(x, y, {100.0, 1e-3, 5000, 1e-8});
    for (std::size_t j = 0; j < 3; ++j) CHECK(std::abs(m.w[j] * m.y_std - ols.coefficients[j]) < 1e-2);
    CHECK(std::abs(m.b * m.y_std + m.y_mean - ols.intercept) < 1e-2);
  }
}

TEST_CASE("final objective does not exceed the starting objective") {
  oracle::Rng rng(6);
  for (int trial = 0; trial < 10; ++trial) {
    auto x = oracle::random_matrix(rng, 60, 4, -1, 1);
    Vector y(60);
    for (std::size_t r = 0; r < 60; ++r) y[r] = rng.uniform(-50, 50) + 10 * x(r, 0);
    auto m = svr_fit(x, y, {rng.uniform(0.1, 10.0), rng.uniform(0.0, 0.5), 800, 1e-8});
    SvrModel start = m;
    start.w.assign(4, 0.0);
    start.b = 0.0;
    CHECK(svr_objective(m, x, y) <= svr_objective(start, x, y) + 1e-12);
    CHECK(svr_objective(m, x, y) == doctest::Approx(m.objective).epsilon(1e-9));
  }
}

TEST_CASE("svr refit is bit-identical and errors are typed") {
  const auto l = noise_free_line();
  CHECK(svr_fit(l.x, l.y) == svr_fit(l.x, l.y));
  for (SvrParams p : {SvrParams{0.0, 0.1, 10, 1e-8}, SvrParams{1.0, -0.1, 10, 1e-8}, SvrParams{1.0, 0.1, 0, 1e-8}}) {
    try {
      svr_fit(l.x, l.y, p);
      FAIL("expected BadHyperparam");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::BadHyperparam);
    }
  }
  auto m = svr_fit(l.x, l.y, {1.0, 0.1, 50, 1e-8});
  CHECK_FALSE(m.converged);
  CHECK(m.iterations == 50);
  CHECK_THROWS_AS(svr_predict(m, Matrix{{1.0, 2.0}}), Error);
}
