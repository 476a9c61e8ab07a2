#include "regress_bench/preprocess.hpp"

#include <cmath>

#include "regress_bench/error.hpp"
#include "regress_bench/random.hpp"

namespace regress_bench {

std::vector<CategoryEncoding> encoding_table() {
  return {
      {"sex", {{"female", 0}, {"male", 1}}},
      {"smoker", {{"no", 0}, {"yes", 1}}},
      {"region", {{"northeast", 0}, {"northwest", 1}, {"southeast", 2}, {"southwest", 3}}},
  };
}

EncodedMatrix encode(const Dataset& d) {
  EncodedMatrix m;
  m.x = Matrix(d.n_rows(), kFeatureNames.size());
  for (std::size_t i = 0; i < d.n_rows(); ++i) {
    m.x(i, 0) = static_cast<double>(d.age()[i]);
    m.x(i, 1) = static_cast<double>(d.sex()[i]);
    m.x(i, 2) = d.bmi()[i];
    m.x(i, 3) = static_cast<double>(d.children()[i]);
    m.x(i, 4) = static_cast<double>(d.smoker()[i]);
    m.x(i, 5) = static_cast<double>(d.region()[i]);
  }
  if (d.has_target()) m.y.assign(d.charges().begin(), d.charges().end());
  m.feature_names.assign(kFeatureNames.begin(), kFeatureNames.end());
  return m;
}

std::size_t train_count(std::size_t n, double ratio) {
  return static_cast<std::size_t>(std::floor(ratio * static_cast<double>(n) + 1e-9));
}

Split split(const EncodedMatrix& m, double ratio, std::uint64_t seed) {
  if (!(ratio > 0.0 && ratio < 1.0)) fail(ErrorKind::BadRatio, "split ratio must lie in (0, 1)");
  const std::size_t n = m.x.rows();
  if (n == 0) fail(ErrorKind::EmptyInput, "cannot split an empty matrix");
  if (m.y.size() != n) fail(ErrorKind::DimensionMismatch, "x and y row counts differ");

  auto order = shuffled_indices(n, seed);
  const std::size_t n_train = train_count(n, ratio);

  Split s;
  s.seed = seed;
  s.ratio = ratio;
  s.train_rows.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n_train));
  s.test_rows.assign(order.begin() + static_cast<std::ptrdiff_t>(n_train), order.end());
  s.x_train = m.x.take_rows(s.train_rows);
  s.y_train = take(m.y, s.train_rows);
  s.x_test = m.x.take_rows(s.test_rows);
  s.y_test = take(m.y, s.test_rows);
  return s;
}

ScalerParams scaler_fit(const Matrix& x) {
  if (x.empty()) fail(ErrorKind::EmptyInput, "scaler fit on zero rows");
  const std::size_t n = x.rows();
  const std::size_t d = x.cols();
  ScalerParams p{Vector(d, 0.0), Vector(d, 0.0)};
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < d; ++c) p.mean[c] += x(r, c);
  for (auto& m : p.mean) m /= static_cast<double>(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      const double dev = x(r, c) - p.mean[c];
      p.std[c] += dev * dev;
    }
  for (auto& s : p.std) s = std::sqrt(s / static_cast<double>(n));
  return p;
}

Matrix scaler_transform(const ScalerParams& p, const Matrix& x) {
  if (x.cols() != p.mean.size() || p.std.size() != p.mean.size())
    fail(ErrorKind::DimensionMismatch, "scaler fitted on " + std::to_string(p.mean.size()) + " columns, got " +
                                           std::to_string(x.cols()));
  Matrix out(x.rows(), x.cols());
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c)
      out(r, c) = p.std[c] == 0.0 ? 0.0 : (x(r, c) - p.mean[c]) / p.std[c];
  return out;
}

}  // namespace regress_bench
