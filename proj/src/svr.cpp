#include "regress_bench/svr.hpp"

#include <algorithm>
#include <cmath>

#include "regress_bench/error.hpp"

namespace regress_bench {

namespace {

constexpr double kInitialStep = 1.0;
constexpr double kStepDecay = 0.998;
constexpr int kWindow = 100;
// Improvement checks start once steps have shrunk to 1% of the first one.
const int kWarmup = static_cast<int>(std::ceil(std::log(0.01) / std::log(kStepDecay)));

// Problem in centered-x, standardized-y coordinates.
struct Problem {
  Matrix x;
  Vector y;
  double c;
  double epsilon;

  double objective(const Vector& w, double b) const {
    double reg = 0.0;
    for (double v : w) reg += v * v;
    double loss = 0.0;
    for (std::size_t r = 0; r < x.rows(); ++r) {
      auto row = x.row(r);
      double pred = b;
      for (std::size_t j = 0; j < row.size(); ++j) pred += w[j] * row[j];
      const double excess = std::abs(y[r] - pred) - epsilon;
      if (excess > 0.0) loss += excess;
    }
    return 0.5 * reg + c * loss;
  }
};

}  // namespace

SvrModel svr_fit(const Matrix& x, const Vector& y, const SvrParams& params) {
  if (y.size() != x.rows())
    fail(ErrorKind::DimensionMismatch, "x has " + std::to_string(x.rows()) + " rows, y has " + std::to_string(y.size()));
  if (x.rows() < 2) fail(ErrorKind::EmptyInput, "SVR needs at least two rows");
  if (!(params.c > 0.0) || !(params.epsilon >= 0.0) || params.max_iters < 1 || !(params.tol >= 0.0))
    fail(ErrorKind::BadHyperparam, "need c > 0, epsilon >= 0, max_iters >= 1, tol >= 0");

  const std::size_t n = x.rows();
  const std::size_t d = x.cols();

  SvrModel m;
  m.c = params.c;
  m.epsilon = params.epsilon;
  for (double v : y) m.y_mean += v;
  m.y_mean /= static_cast<double>(n);
  double var = 0.0;
  for (double v : y) var += (v - m.y_mean) * (v - m.y_mean);
  m.y_std = std::sqrt(var / static_cast<double>(n));
  if (m.y_std == 0.0) m.y_std = 1.0;

  // Centering x is an exact reparametrization (b absorbs w . x_mean) that
  // decouples the intercept from the weights.
  Vector x_mean(d, 0.0);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j < d; ++j) x_mean[j] += x(r, j);
  for (auto& v : x_mean) v /= static_cast<double>(n);

  Problem p{Matrix(n, d), Vector(n), params.c, params.epsilon};
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t j = 0; j < d; ++j) p.x(r, j) = x(r, j) - x_mean[j];
    p.y[r] = (y[r] - m.y_mean) / m.y_std;
  }

  Vector w(d, 0.0), avg_w(d, 0.0), best_w(d, 0.0), grad_w(d);
  double b = 0.0, avg_b = 0.0, best_b = 0.0;
  double best = p.objective(w, b);
  double window_start = best;
  double step = kInitialStep;
  int iter = 0;
  bool converged = false;

  for (; iter < params.max_iters; ++iter) {
    double grad_b = 0.0;
    grad_w = w;
    for (std::size_t r = 0; r < n; ++r) {
      auto row = p.x.row(r);
      double pred = b;
      for (std::size_t j = 0; j < d; ++j) pred += w[j] * row[j];
      const double resid = p.y[r] - pred;
      if (std::abs(resid) <= p.epsilon) continue;
      const double sign = resid > 0 ? 1.0 : -1.0;
      for (std::size_t j = 0; j < d; ++j) grad_w[j] -= p.c * sign * row[j];
      grad_b -= p.c * sign;
    }
    double norm = grad_b * grad_b;
    for (double g : grad_w) norm += g * g;
    norm = std::sqrt(norm);
    if (norm == 0.0) {
      // Zero subgradient: the current iterate is optimal.
      const double f = p.objective(w, b);
      if (f <= best) {
        best = f;
        best_w = w;
        best_b = b;
      }
      converged = true;
      break;
    }

    const double scale = step / norm;
    for (std::size_t j = 0; j < d; ++j) w[j] -= scale * grad_w[j];
    b -= scale * grad_b;
    step *= kStepDecay;

    const double k = static_cast<double>(iter + 1);
    for (std::size_t j = 0; j < d; ++j) avg_w[j] += (w[j] - avg_w[j]) / k;
    avg_b += (b - avg_b) / k;

    const double f_cur = p.objective(w, b);
    if (f_cur < best) {
      best = f_cur;
      best_w = w;
      best_b = b;
    }
    const double f_avg = p.objective(avg_w, avg_b);
    if (f_avg < best) {
      best = f_avg;
      best_w = avg_w;
      best_b = avg_b;
    }

    if ((iter + 1) % kWindow == 0) {
      if (iter + 1 >= kWarmup && window_start - best < params.tol * std::max(1.0, std::abs(best))) {
        ++iter;
        converged = true;
        break;
      }
      window_start = best;
    }
  }

  m.w = best_w;
  m.b = best_b;
  for (std::size_t j = 0; j < d; ++j) m.b -= best_w[j] * x_mean[j];
  m.converged = converged;
  m.iterations = iter;
  m.objective = best;
  return m;
}

Vector svr_predict(const SvrModel& m, const Matrix& x) {
  if (x.cols() != m.w.size())
    fail(ErrorKind::DimensionMismatch, "model has " + std::to_string(m.w.size()) + " features, input has " +
                                           std::to_string(x.cols()));
  Vector out(x.rows());
  for (std::size_t r = 0; r < x.rows(); ++r) {
    auto row = x.row(r);
    double s = m.b;
    for (std::size_t j = 0; j < row.size(); ++j) s += m.w[j] * row[j];
    out[r] = s * m.y_std + m.y_mean;
  }
  return out;
}

double svr_objective(const SvrModel& m, const Matrix& x, const Vector& y) {
  if (x.rows() != y.size() || x.cols() != m.w.size()) fail(ErrorKind::DimensionMismatch, "objective inputs disagree");
  Problem p{x, Vector(y.size()), m.c, m.epsilon};
  for (std::size_t r = 0; r < y.size(); ++r) p.y[r] = (y[r] - m.y_mean) / m.y_std;
  return p.objective(m.w, m.b);
}

}  // namespace regress_bench
