#include "regress_bench/model.hpp"

namespace regress_bench {

std::string_view to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::GradientBoosting: return "gradient_boosting";
    case ModelKind::LinearRegression: return "linear_regression";
    case ModelKind::Svr: return "svr";
  }
  return "unknown";
}

std::string_view display_name(ModelKind kind) {
  switch (kind) {
    case ModelKind::GradientBoosting: return "Gradient boosting";
    case ModelKind::LinearRegression: return "Linear regression";
    case ModelKind::Svr: return "Support vector machine";
  }
  return "unknown";
}

std::optional<ModelKind> parse_model_kind(std::string_view text) {
  for (auto k : kAllModels)
    if (text == to_string(k)) return k;
  if (text == "gb" || text == "gbm") return ModelKind::GradientBoosting;
  if (text == "lr" || text == "ols") return ModelKind::LinearRegression;
  return std::nullopt;
}

Vector FittedModel::predict(const Matrix& x_raw) const {
  const Matrix x = scaler_transform(scaler, x_raw);
  return std::visit(
      [&](const auto& m) -> Vector {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, LinearModel>) return linear_predict(m, x);
        else if constexpr (std::is_same_v<T, GbmModel>) return gbm_predict(m, x);
        else return svr_predict(m, x);
      },
      regressor);
}

FittedModel fit_model(const ModelSpec& spec, const Matrix& x_raw, const Vector& y) {
  FittedModel out;
  out.kind = spec.kind;
  out.scaler = scaler_fit(x_raw);
  const Matrix x = scaler_transform(out.scaler, x_raw);
  switch (spec.kind) {
    case ModelKind::LinearRegression: out.regressor = ols_fit(x, y); break;
    case ModelKind::GradientBoosting: out.regressor = gbm_fit(x, y, spec.gbm); break;
    case ModelKind::Svr: out.regressor = svr_fit(x, y, spec.svr); break;
  }
  return out;
}

}  // namespace regress_bench
