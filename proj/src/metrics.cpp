#include "regress_bench/metrics.hpp"

#include <cmath>
#include <string>

#include "regress_bench/error.hpp"

namespace regress_bench {

namespace {

void check_lengths(std::span<const double> observed, std::span<const double> predicted) {
  if (observed.size() != predicted.size())
    fail(ErrorKind::DimensionMismatch, "observed has " + std::to_string(observed.size()) + " values, predicted has " +
                                           std::to_string(predicted.size()));
  if (observed.empty()) fail(ErrorKind::EmptyInput, "metric of an empty sample");
}

}  // namespace

double total_sum_squares(std::span<const double> observed) {
  double mean = 0.0;
  for (double v : observed) mean += v;
  mean /= static_cast<double>(observed.size());
  double tss = 0.0;
  for (double v : observed) tss += (v - mean) * (v - mean);
  return tss;
}

double residual_sum_squares(std::span<const double> observed, std::span<const double> predicted) {
  check_lengths(observed, predicted);
  double rss = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double e = observed[i] - predicted[i];
    rss += e * e;
  }
  return rss;
}

double r_squared(std::span<const double> observed, std::span<const double> predicted) {
  check_lengths(observed, predicted);
  if (observed.size() < 2) fail(ErrorKind::DimensionMismatch, "R squared needs at least two values");
  const double tss = total_sum_squares(observed);
  if (tss == 0.0) fail(ErrorKind::ZeroVariance, "observed values are constant");
  return 1.0 - residual_sum_squares(observed, predicted) / tss;
}

double mse(std::span<const double> observed, std::span<const double> predicted) {
  return residual_sum_squares(observed, predicted) / static_cast<double>(observed.size());
}

double rmse(std::span<const double> observed, std::span<const double> predicted) {
  return std::sqrt(mse(observed, predicted));
}

MetricPair score(std::span<const double> observed, std::span<const double> predicted) {
  return {r_squared(observed, predicted), rmse(observed, predicted)};
}

}  // namespace regress_bench
