#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <variant>

#include "regress_bench/gbm.hpp"
#include "regress_bench/linear.hpp"
#include "regress_bench/matrix.hpp"
#include "regress_bench/preprocess.hpp"
#include "regress_bench/svr.hpp"

namespace regress_bench {

enum class ModelKind { GradientBoosting, LinearRegression, Svr };

// Report order.
inline constexpr std::array<ModelKind, 3> kAllModels{ModelKind::GradientBoosting, ModelKind::LinearRegression,
                                                     ModelKind::Svr};

std::string_view to_string(ModelKind kind);          // gradient_boosting, linear_regression, svr
std::string_view display_name(ModelKind kind);       // Gradient boosting, ...
std::optional<ModelKind> parse_model_kind(std::string_view text);

struct ModelSpec {
  ModelKind kind = ModelKind::GradientBoosting;
  GbmParams gbm;
  SvrParams svr;
};

using Regressor = std::variant<LinearModel, GbmModel, SvrModel>;

// A regressor together with the feature scaler fitted on its training rows.
// predict() takes raw encoded features.
struct FittedModel {
  ModelKind kind = ModelKind::LinearRegression;
  ScalerParams scaler;
  Regressor regressor;

  Vector predict(const Matrix& x_raw) const;
};

// Fits the scaler on x_raw, then the regressor on the scaled features.
FittedModel fit_model(const ModelSpec& spec, const Matrix& x_raw, const Vector& y);

}  // namespace regress_bench
