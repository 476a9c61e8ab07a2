#pragma once

#include <span>

namespace regress_bench {

struct MetricPair {
  double r2 = 0.0;
  double rmse = 0.0;
};

// Sum of squared deviations of `observed` from its mean.
double total_sum_squares(std::span<const double> observed);
double residual_sum_squares(std::span<const double> observed, std::span<const double> predicted);

// 1 - RSS / TSS. Throws DimensionMismatch (lengths differ or < 2) or
// ZeroVariance (constant observed).
double r_squared(std::span<const double> observed, std::span<const double> predicted);
// sqrt(RSS / n). Throws DimensionMismatch, EmptyInput.
double rmse(std::span<const double> observed, std::span<const double> predicted);
// RSS / n.
double mse(std::span<const double> observed, std::span<const double> predicted);

MetricPair score(std::span<const double> observed, std::span<const double> predicted);

}  // namespace regress_bench
