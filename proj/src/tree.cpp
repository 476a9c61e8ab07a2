#include "regress_bench/tree.hpp"

#include <algorithm>
#include <numeric>

#include "regress_bench/error.hpp"

namespace regress_bench {

RegressionTree::RegressionTree(std::vector<TreeNode> nodes, std::size_t n_features)
    : nodes_(std::move(nodes)), n_features_(n_features) {}

int RegressionTree::depth() const {
  if (nodes_.empty()) return 0;
  std::vector<std::pair<int, int>> stack{{0, 0}};
  int deepest = 0;
  while (!stack.empty()) {
    auto [i, d] = stack.back();
    stack.pop_back();
    deepest = std::max(deepest, d);
    const auto& n = nodes_[static_cast<std::size_t>(i)];
    if (!n.is_leaf()) {
      stack.emplace_back(n.left, d + 1);
      stack.emplace_back(n.right, d + 1);
    }
  }
  return deepest;
}

std::size_t RegressionTree::n_leaves() const {
  return static_cast<std::size_t>(std::count_if(nodes_.begin(), nodes_.end(), [](const auto& n) { return n.is_leaf(); }));
}

double RegressionTree::predict_row(std::span<const double> row) const {
  std::size_t i = 0;
  while (!nodes_[i].is_leaf()) {
    const auto& n = nodes_[i];
    i = static_cast<std::size_t>(row[static_cast<std::size_t>(n.feature)] <= n.threshold ? n.left : n.right);
  }
  return nodes_[i].value;
}

std::optional<SplitChoice> best_split(const Matrix& x, std::span<const double> targets,
                                      std::span<const std::size_t> rows, int min_samples_leaf) {
  const std::size_t n = rows.size();
  const auto min_leaf = static_cast<std::size_t>(std::max(min_samples_leaf, 1));
  if (n < 2 * min_leaf) return std::nullopt;

  double total = 0.0;
  for (auto r : rows) total += targets[r];

  std::optional<SplitChoice> best;
  std::vector<std::size_t> order(rows.begin(), rows.end());
  for (std::size_t f = 0; f < x.cols(); ++f) {
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return x(a, f) < x(b, f); });
    double left_sum = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      left_sum += targets[order[i]];
      const double here = x(order[i], f);
      const double next = x(order[i + 1], f);
      const std::size_t n_left = i + 1;
      const std::size_t n_right = n - n_left;
      if (here == next || n_left < min_leaf || n_right < min_leaf) continue;

      const double mean_left = left_sum / static_cast<double>(n_left);
      const double mean_right = (total - left_sum) / static_cast<double>(n_right);
      const double diff = mean_left - mean_right;
      const double gain =
          static_cast<double>(n_left) * static_cast<double>(n_right) / static_cast<double>(n) * diff * diff;
      if (gain > 0.0 && (!best || gain > best->gain)) {
        double threshold = here + (next - here) / 2.0;
        if (threshold >= next) threshold = here;
        best = SplitChoice{static_cast<int>(f), threshold, gain};
      }
    }
  }
  return best;
}

namespace {

class TreeBuilder {
 public:
  TreeBuilder(const Matrix& x, std::span<const double> targets, const TreeParams& params)
      : x_(x), targets_(targets), params_(params) {}

  int build(std::vector<std::size_t> rows, int depth) {
    const int index = static_cast<int>(nodes_.size());
    nodes_.emplace_back();

    double sum = 0.0;
    double lo = targets_[rows.front()];
    double hi = lo;
    for (auto r : rows) {
      sum += targets_[r];
      lo = std::min(lo, targets_[r]);
      hi = std::max(hi, targets_[r]);
    }
    nodes_[static_cast<std::size_t>(index)].value = sum / static_cast<double>(rows.size());
    nodes_[static_cast<std::size_t>(index)].n_samples = rows.size();

    if (depth >= params_.max_depth || lo == hi) return index;
    auto choice = best_split(x_, targets_, rows, params_.min_samples_leaf);
    if (!choice) return index;

    std::vector<std::size_t> left, right;
    for (auto r : rows) (x_(r, static_cast<std::size_t>(choice->feature)) <= choice->threshold ? left : right).push_back(r);
    rows.clear();
    rows.shrink_to_fit();

    const int l = build(std::move(left), depth + 1);
    const int r = build(std::move(right), depth + 1);
    auto& node = nodes_[static_cast<std::size_t>(index)];
    node.feature = choice->feature;
    node.threshold = choice->threshold;
    node.left = l;
    node.right = r;
    return index;
  }

  std::vector<TreeNode> take() { return std::move(nodes_); }

 private:
  const Matrix& x_;
  std::span<const double> targets_;
  TreeParams params_;
  std::vector<TreeNode> nodes_;
};

}  // namespace

RegressionTree tree_fit(const Matrix& x, std::span<const double> targets, const TreeParams& params) {
  if (targets.size() != x.rows())
    fail(ErrorKind::DimensionMismatch, "x has " + std::to_string(x.rows()) + " rows, targets has " +
                                           std::to_string(targets.size()));
  if (x.rows() == 0) fail(ErrorKind::EmptyInput, "tree fit on zero rows");
  if (params.max_depth < 0 || params.min_samples_leaf < 1)
    fail(ErrorKind::BadHyperparam, "max_depth must be >= 0 and min_samples_leaf >= 1");

  std::vector<std::size_t> rows(x.rows());
  std::iota(rows.begin(), rows.end(), std::size_t{0});
  TreeBuilder builder(x, targets, params);
  builder.build(std::move(rows), 0);
  return RegressionTree(builder.take(), x.cols());
}

Vector tree_predict(const RegressionTree& t, const Matrix& x) {
  if (x.cols() != t.n_features())
    fail(ErrorKind::DimensionMismatch, "tree has " + std::to_string(t.n_features()) + " features, input has " +
                                           std::to_string(x.cols()));
  Vector out(x.rows());
  for (std::size_t r = 0; r < x.rows(); ++r) out[r] = t.predict_row(x.row(r));
  return out;
}

}  // namespace regress_bench
