#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "regress_bench/matrix.hpp"
#include "regress_bench/tree.hpp"

namespace regress_bench {

struct GbmParams {
  int n_estimators = 100;
  double learning_rate = 0.1;
  int max_depth = 3;
  int min_samples_leaf = 1;

  bool operator==(const GbmParams&) const = default;
};

// Squared-error gradient boosting: F0 = mean(y), then each stage fits a
// tree to the current residuals and adds learning_rate * tree.
struct GbmModel {
  double initial_prediction = 0.0;
  std::vector<RegressionTree> trees;
  GbmParams params;

  bool operator==(const GbmModel&) const = default;
};

GbmModel gbm_fit(const Matrix& x, const Vector& y, const GbmParams& params = {});

// Accumulates stage by stage, exactly as during training. `n_stages` caps
// the number of trees used (default: all of them).
Vector gbm_predict(const GbmModel& m, const Matrix& x,
                   std::size_t n_stages = std::numeric_limits<std::size_t>::max());

}  // namespace regress_bench
