#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "regress_bench/matrix.hpp"
#include "regress_bench/model.hpp"

namespace regress_bench {

inline constexpr std::size_t kDefaultFolds = 10;

struct FoldScore {
  std::size_t size = 0;
  double r2 = 0.0;  // NaN when the fold is a single row or has constant targets
  double rmse = 0.0;
  double mse = 0.0;
  double tss = 0.0;  // total sum of squares of the held-out targets
};

struct CvReport {
  std::vector<FoldScore> folds;
  double weighted_mean_r2 = 0.0;
  std::size_t k = 0;
  std::uint64_t seed = 0;
};

// Seeded shuffle cut into k contiguous folds; the first n % k folds get one
// extra index. Throws BadK unless 2 <= k <= n.
std::vector<std::vector<std::size_t>> kfold_indices(std::size_t n, std::size_t k, std::uint64_t seed);

// Refits scaler and model on the other k - 1 folds for every held-out fold.
// Fit errors are rethrown with the fold index in the message.
CvReport cross_validate(const ModelSpec& spec, const Matrix& x, const Vector& y, std::size_t k, std::uint64_t seed);

// sum(size_i * r2_i) / sum(size_i) over folds with a defined R squared.
double weighted_mean_r2(const std::vector<FoldScore>& folds);

}  // namespace regress_bench
