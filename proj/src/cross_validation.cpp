#include "regress_bench/cross_validation.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "regress_bench/error.hpp"
#include "regress_bench/metrics.hpp"
#include "regress_bench/random.hpp"

namespace regress_bench {

std::vector<std::vector<std::size_t>> kfold_indices(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (k < 2 || k > n)
    fail(ErrorKind::BadK, "need 2 <= k <= n, got k=" + std::to_string(k) + " n=" + std::to_string(n));
  const auto order = shuffled_indices(n, seed);
  std::vector<std::vector<std::size_t>> folds(k);
  std::size_t pos = 0;
  for (std::size_t f = 0; f < k; ++f) {
    const std::size_t size = n / k + (f < n % k ? 1 : 0);
    folds[f].assign(order.begin() + static_cast<std::ptrdiff_t>(pos),
                    order.begin() + static_cast<std::ptrdiff_t>(pos + size));
    pos += size;
  }
  return folds;
}

double weighted_mean_r2(const std::vector<FoldScore>& folds) {
  double num = 0.0;
  double den = 0.0;
  for (const auto& f : folds) {
    if (std::isnan(f.r2)) continue;
    num += static_cast<double>(f.size) * f.r2;
    den += static_cast<double>(f.size);
  }
  return den == 0.0 ? std::numeric_limits<double>::quiet_NaN() : num / den;
}

CvReport cross_validate(const ModelSpec& spec, const Matrix& x, const Vector& y, std::size_t k, std::uint64_t seed) {
  if (y.size() != x.rows()) fail(ErrorKind::DimensionMismatch, "x and y row counts differ");
  const auto folds = kfold_indices(x.rows(), k, seed);

  CvReport report;
  report.k = k;
  report.seed = seed;
  for (std::size_t f = 0; f < folds.size(); ++f) {
    std::vector<std::size_t> train;
    train.reserve(x.rows() - folds[f].size());
    for (std::size_t g = 0; g < folds.size(); ++g)
      if (g != f) train.insert(train.end(), folds[g].begin(), folds[g].end());

    try {
      const auto model = fit_model(spec, x.take_rows(train), take(y, train));
      const auto held_y = take(y, folds[f]);
      const auto pred = model.predict(x.take_rows(folds[f]));
      FoldScore s;
      s.size = folds[f].size();
      s.mse = mse(held_y, pred);
      s.rmse = rmse(held_y, pred);
      s.tss = total_sum_squares(held_y);
      s.r2 = held_y.size() >= 2 && s.tss > 0.0 ? r_squared(held_y, pred) : std::numeric_limits<double>::quiet_NaN();
      report.folds.push_back(s);
    } catch (const Error& e) {
      throw Error(e.kind(), "fold " + std::to_string(f) + ": " + e.detail(), e.row());
    }
  }
  report.weighted_mean_r2 = weighted_mean_r2(report.folds);
  return report;
}

}  // namespace regress_bench
