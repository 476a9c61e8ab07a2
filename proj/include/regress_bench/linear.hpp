#pragma once

#include "regress_bench/matrix.hpp"

namespace regress_bench {

// y = intercept + coefficients . x
struct LinearModel {
  double intercept = 0.0;
  Vector coefficients;

  bool operator==(const LinearModel&) const = default;
};

// Ordinary least squares through a Householder QR of [1 | x]. Throws
// DimensionMismatch, or RankDeficient when the design matrix does not have
// full column rank (including rows <= cols).
LinearModel ols_fit(const Matrix& x, const Vector& y);

Vector linear_predict(const LinearModel& m, const Matrix& x);

}  // namespace regress_bench
