#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "regress_bench/matrix.hpp"

namespace regress_bench {

struct TreeParams {
  int max_depth = 3;
  int min_samples_leaf = 1;
};

struct TreeNode {
  int feature = -1;  // -1 marks a leaf
  double threshold = 0.0;
  int left = -1;
  int right = -1;
  double value = 0.0;  // mean target of the training rows reaching the node
  std::size_t n_samples = 0;

  bool is_leaf() const noexcept { return feature < 0; }
  bool operator==(const TreeNode&) const = default;
};

// Binary regression tree stored as a flat node array, root at index 0.
// Rows with x[feature] <= threshold go left.
class RegressionTree {
 public:
  RegressionTree() = default;
  RegressionTree(std::vector<TreeNode> nodes, std::size_t n_features);

  std::span<const TreeNode> nodes() const noexcept { return nodes_; }
  std::size_t n_features() const noexcept { return n_features_; }
  int depth() const;
  std::size_t n_leaves() const;

  double predict_row(std::span<const double> row) const;

  bool operator==(const RegressionTree&) const = default;

 private:
  std::vector<TreeNode> nodes_;
  std::size_t n_features_ = 0;
};

struct SplitChoice {
  int feature = -1;
  double threshold = 0.0;
  double gain = 0.0;  // reduction in summed squared error
};

// Best variance-reduction split of `rows`, scanning midpoints between
// consecutive distinct values. Ties keep the lowest feature, then the
// smallest threshold. nullopt when no admissible split has positive gain.
std::optional<SplitChoice> best_split(const Matrix& x, std::span<const double> targets,
                                      std::span<const std::size_t> rows, int min_samples_leaf);

RegressionTree tree_fit(const Matrix& x, std::span<const double> targets, const TreeParams& params = {});
Vector tree_predict(const RegressionTree& t, const Matrix& x);

}  // namespace regress_bench
