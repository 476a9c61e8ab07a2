#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "regress_bench/dataset.hpp"
#include "regress_bench/matrix.hpp"

namespace regress_bench {

inline constexpr std::array<std::string_view, 6> kFeatureNames{"age", "sex", "bmi", "children", "smoker", "region"};
inline constexpr double kDefaultSplitRatio = 0.8;

// Label encoding of one categorical feature: category -> integer code.
struct CategoryEncoding {
  std::string column;
  std::vector<std::pair<std::string, int>> codes;

  bool operator==(const CategoryEncoding&) const = default;
};

// sex {female 0, male 1}, smoker {no 0, yes 1}, region alphabetical 0..3.
std::vector<CategoryEncoding> encoding_table();

struct EncodedMatrix {
  Matrix x;  // n x 6, columns in kFeatureNames order
  Vector y;  // charges; empty when the dataset has no target
  std::vector<std::string> feature_names;
};

EncodedMatrix encode(const Dataset& d);

struct Split {
  Matrix x_train;
  Vector y_train;
  Matrix x_test;
  Vector y_test;
  std::vector<std::size_t> train_rows;
  std::vector<std::size_t> test_rows;
  std::uint64_t seed = 0;
  double ratio = 0.0;
};

// floor(ratio * n), robust to representation error such as 0.29 * 100.
std::size_t train_count(std::size_t n, double ratio);

// Seeded shuffle; the first train_count(n, ratio) shuffled rows train.
Split split(const EncodedMatrix& m, double ratio, std::uint64_t seed);

struct ScalerParams {
  Vector mean;
  Vector std;  // population convention (divisor n)

  bool operator==(const ScalerParams&) const = default;
};

ScalerParams scaler_fit(const Matrix& x_train);
// (x - mean) / std per column; columns with std == 0 map to 0.
Matrix scaler_transform(const ScalerParams& p, const Matrix& x);

}  // namespace regress_bench
