#include "regress_bench/gbm.hpp"

#include <algorithm>
#include <cmath>

#include "regress_bench/error.hpp"

namespace regress_bench {

GbmModel gbm_fit(const Matrix& x, const Vector& y, const GbmParams& params) {
  if (y.size() != x.rows())
    fail(ErrorKind::DimensionMismatch, "x has " + std::to_string(x.rows()) + " rows, y has " + std::to_string(y.size()));
  if (x.rows() < 2) fail(ErrorKind::EmptyInput, "gradient boosting needs at least two rows");
  if (params.n_estimators < 1 || !(params.learning_rate > 0.0) || !std::isfinite(params.learning_rate) ||
      params.max_depth < 0 || params.min_samples_leaf < 1)
    fail(ErrorKind::BadHyperparam, "need n_estimators >= 1, learning_rate > 0, max_depth >= 0, min_samples_leaf >= 1");

  GbmModel m;
  m.params = params;
  double sum = 0.0;
  for (double v : y) sum += v;
  m.initial_prediction = sum / static_cast<double>(y.size());

  const TreeParams tree_params{params.max_depth, params.min_samples_leaf};
  Vector current(y.size(), m.initial_prediction);
  Vector residual(y.size());
  m.trees.reserve(static_cast<std::size_t>(params.n_estimators));
  for (int stage = 0; stage < params.n_estimators; ++stage) {
    for (std::size_t i = 0; i < y.size(); ++i) residual[i] = y[i] - current[i];
    auto tree = tree_fit(x, residual, tree_params);
    for (std::size_t i = 0; i < y.size(); ++i) current[i] += params.learning_rate * tree.predict_row(x.row(i));
    m.trees.push_back(std::move(tree));
  }
  return m;
}

Vector gbm_predict(const GbmModel& m, const Matrix& x, std::size_t n_stages) {
  const std::size_t stages = std::min(n_stages, m.trees.size());
  if (!m.trees.empty() && x.cols() != m.trees.front().n_features())
    fail(ErrorKind::DimensionMismatch, "model has " + std::to_string(m.trees.front().n_features()) +
                                           " features, input has " + std::to_string(x.cols()));
  Vector out(x.rows(), m.initial_prediction);
  for (std::size_t s = 0; s < stages; ++s)
    for (std::size_t r = 0; r < x.rows(); ++r) out[r] += m.params.learning_rate * m.trees[s].predict_row(x.row(r));
  return out;
}

}  // namespace regress_bench
