#pragma once

#include "regress_bench/matrix.hpp"

namespace regress_bench {

struct SvrParams {
  double c = 1.0;
  double epsilon = 0.1;  // tube half-width in standardized-target units
  int max_iters = 5000;
  double tol = 1e-8;

  bool operator==(const SvrParams&) const = default;
};

// Linear epsilon-insensitive support vector regression. w and b act on the
// standardized target (y - y_mean) / y_std; predictions are mapped back.
struct SvrModel {
  Vector w;
  double b = 0.0;
  double epsilon = 0.1;
  double c = 1.0;
  double y_mean = 0.0;
  double y_std = 1.0;
  // Diagnostics from the optimizer; `converged` is false when max_iters ran
  // out before the improvement test passed (the best iterate is kept).
  bool converged = false;
  int iterations = 0;
  double objective = 0.0;

  bool operator==(const SvrModel&) const = default;
};

// Minimizes 0.5 |w|^2 + c * sum(max(0, |y~ - w.x - b| - epsilon)) by
// full-batch subgradient descent with normalized, geometrically decaying
// steps. Both the current and the running-average iterate are scored and
// the best one seen is returned. Throws BadHyperparam, DimensionMismatch.
SvrModel svr_fit(const Matrix& x, const Vector& y, const SvrParams& params = {});

Vector svr_predict(const SvrModel& m, const Matrix& x);

// Primal objective of `m` on (x, y), with y standardized by the model.
double svr_objective(const SvrModel& m, const Matrix& x, const Vector& y);

}  // namespace regress_bench
