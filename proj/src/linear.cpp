#include "regress_bench/linear.hpp"

#include <algorithm>
#include <cmath>

#include "regress_bench/error.hpp"

namespace regress_bench {

namespace {

// Relative tolerance on |R_kk| below which a column counts as dependent.
constexpr double kRankTolerance = 1e-10;

}  // namespace

LinearModel ols_fit(const Matrix& x, const Vector& y) {
  const std::size_t n = x.rows();
  const std::size_t p = x.cols() + 1;
  if (y.size() != n) fail(ErrorKind::DimensionMismatch, "x has " + std::to_string(n) + " rows, y has " + std::to_string(y.size()));
  if (n < 2) fail(ErrorKind::RankDeficient, "need at least two rows");
  if (n < p) fail(ErrorKind::RankDeficient, "more parameters than rows");

  // Column-major working copy of the design matrix.
  std::vector<Vector> a(p, Vector(n, 1.0));
  for (std::size_t c = 1; c < p; ++c)
    for (std::size_t r = 0; r < n; ++r) a[c][r] = x(r, c - 1);
  Vector b = y;

  double max_col_norm = 0.0;
  for (const auto& col : a) {
    double s = 0.0;
    for (double v : col) s += v * v;
    max_col_norm = std::max(max_col_norm, std::sqrt(s));
  }

  Vector diag(p, 0.0);
  Vector v(n);
  for (std::size_t k = 0; k < p; ++k) {
    double norm = 0.0;
    for (std::size_t r = k; r < n; ++r) norm += a[k][r] * a[k][r];
    norm = std::sqrt(norm);
    if (norm <= kRankTolerance * max_col_norm)
      fail(ErrorKind::RankDeficient, "design matrix column " + std::to_string(k) + " is linearly dependent");

    const double alpha = a[k][k] > 0 ? -norm : norm;
    double vnorm2 = 0.0;
    for (std::size_t r = k; r < n; ++r) {
      v[r] = a[k][r];
      if (r == k) v[r] -= alpha;
      vnorm2 += v[r] * v[r];
    }
    diag[k] = alpha;

    auto reflect = [&](Vector& col) {
      double dot = 0.0;
      for (std::size_t r = k; r < n; ++r) dot += v[r] * col[r];
      const double scale = 2.0 * dot / vnorm2;
      for (std::size_t r = k; r < n; ++r) col[r] -= scale * v[r];
    };
    if (vnorm2 > 0.0) {
      for (std::size_t c = k + 1; c < p; ++c) reflect(a[c]);
      reflect(b);
    }
  }

  // Back substitution on R beta = Q^T b; R's strict upper part lives in a.
  Vector beta(p, 0.0);
  for (std::size_t k = p; k-- > 0;) {
    double s = b[k];
    for (std::size_t c = k + 1; c < p; ++c) s -= a[c][k] * beta[c];
    beta[k] = s / diag[k];
  }

  LinearModel m;
  m.intercept = beta[0];
  m.coefficients.assign(beta.begin() + 1, beta.end());
  return m;
}

Vector linear_predict(const LinearModel& m, const Matrix& x) {
  if (x.cols() != m.coefficients.size())
    fail(ErrorKind::DimensionMismatch, "model has " + std::to_string(m.coefficients.size()) + " features, input has " +
                                           std::to_string(x.cols()));
  Vector out(x.rows());
  for (std::size_t r = 0; r < x.rows(); ++r) {
    double s = m.intercept;
    auto row = x.row(r);
    for (std::size_t c = 0; c < row.size(); ++c) s += m.coefficients[c] * row[c];
    out[r] = s;
  }
  return out;
}

}  // namespace regress_bench
