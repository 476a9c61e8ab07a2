#include "regress_bench/serialization.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

#include "regress_bench/error.hpp"

namespace regress_bench {

namespace {

Json number_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json tree_to_json(const RegressionTree& t) {
  Json nodes = Json::array();
  for (const auto& n : t.nodes()) {
    nodes.push_back({{"feature", n.feature},
                     {"threshold", n.threshold},
                     {"left", n.left},
                     {"right", n.right},
                     {"value", n.value},
                     {"n_samples", n.n_samples}});
  }
  return {{"n_features", t.n_features()}, {"nodes", std::move(nodes)}};
}

RegressionTree tree_from_json(const Json& j) {
  std::vector<TreeNode> nodes;
  for (const auto& n : j.at("nodes")) {
    TreeNode node;
    node.feature = n.at("feature").get<int>();
    node.threshold = n.at("threshold").get<double>();
    node.left = n.at("left").get<int>();
    node.right = n.at("right").get<int>();
    node.value = n.at("value").get<double>();
    node.n_samples = n.at("n_samples").get<std::size_t>();
    nodes.push_back(node);
  }
  const auto count = static_cast<int>(nodes.size());
  if (count == 0) fail(ErrorKind::SchemaMismatch, "tree without nodes");
  for (const auto& n : nodes) {
    if (n.is_leaf()) continue;
    if (n.left <= 0 || n.left >= count || n.right <= 0 || n.right >= count)
      fail(ErrorKind::SchemaMismatch, "tree node child index out of range");
  }
  return RegressionTree(std::move(nodes), j.at("n_features").get<std::size_t>());
}

Json regressor_params(const Regressor& r) {
  return std::visit(
      [](const auto& m) -> Json {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, LinearModel>) {
          return {{"intercept", m.intercept}, {"coefficients", m.coefficients}};
        } else if constexpr (std::is_same_v<T, GbmModel>) {
          Json trees = Json::array();
          for (const auto& t : m.trees) trees.push_back(tree_to_json(t));
          return {{"initial_prediction", m.initial_prediction},
                  {"learning_rate", m.params.learning_rate},
                  {"n_estimators", m.params.n_estimators},
                  {"max_depth", m.params.max_depth},
                  {"min_samples_leaf", m.params.min_samples_leaf},
                  {"trees", std::move(trees)}};
        } else {
          return {{"w", m.w},
                  {"b", m.b},
                  {"epsilon", m.epsilon},
                  {"c", m.c},
                  {"y_mean", m.y_mean},
                  {"y_std", m.y_std},
                  {"converged", m.converged},
                  {"iterations", m.iterations},
                  {"objective", m.objective}};
        }
      },
      r);
}

Regressor regressor_from_json(ModelKind kind, const Json& p) {
  switch (kind) {
    case ModelKind::LinearRegression:
      return LinearModel{p.at("intercept").get<double>(), p.at("coefficients").get<Vector>()};
    case ModelKind::GradientBoosting: {
      GbmModel m;
      m.initial_prediction = p.at("initial_prediction").get<double>();
      m.params.learning_rate = p.at("learning_rate").get<double>();
      m.params.n_estimators = p.at("n_estimators").get<int>();
      m.params.max_depth = p.at("max_depth").get<int>();
      m.params.min_samples_leaf = p.at("min_samples_leaf").get<int>();
      for (const auto& t : p.at("trees")) m.trees.push_back(tree_from_json(t));
      return m;
    }
    case ModelKind::Svr: {
      SvrModel m;
      m.w = p.at("w").get<Vector>();
      m.b = p.at("b").get<double>();
      m.epsilon = p.at("epsilon").get<double>();
      m.c = p.at("c").get<double>();
      m.y_mean = p.at("y_mean").get<double>();
      m.y_std = p.at("y_std").get<double>();
      m.converged = p.at("converged").get<bool>();
      m.iterations = p.at("iterations").get<int>();
      m.objective = p.at("objective").get<double>();
      return m;
    }
  }
  fail(ErrorKind::SchemaMismatch, "unknown model kind");
}

}  // namespace

Json to_json(const BoxPlotSummary& s) {
  return {{"q1", s.q1},
          {"median", s.median},
          {"q3", s.q3},
          {"iqr", s.iqr},
          {"lower_fence", s.lower_fence},
          {"upper_fence", s.upper_fence},
          {"whisker_low", s.whisker_low},
          {"whisker_high", s.whisker_high},
          {"outliers", s.outliers},
          {"n", s.n}};
}

BoxPlotSummary box_summary_from_json(const Json& j) {
  BoxPlotSummary s;
  s.q1 = j.at("q1").get<double>();
  s.median = j.at("median").get<double>();
  s.q3 = j.at("q3").get<double>();
  s.iqr = j.at("iqr").get<double>();
  s.lower_fence = j.at("lower_fence").get<double>();
  s.upper_fence = j.at("upper_fence").get<double>();
  s.whisker_low = j.at("whisker_low").get<double>();
  s.whisker_high = j.at("whisker_high").get<double>();
  s.outliers = j.at("outliers").get<std::vector<double>>();
  s.n = j.at("n").get<std::size_t>();
  return s;
}

Json to_json(const std::vector<GroupSummary>& groups) {
  Json out = Json::array();
  for (const auto& g : groups) out.push_back({{"group", g.group}, {"summary", to_json(g.summary)}});
  return out;
}

Json to_json(const ScalerParams& p) { return {{"mean", p.mean}, {"std", p.std}}; }

ScalerParams scaler_from_json(const Json& j) {
  ScalerParams p{j.at("mean").get<Vector>(), j.at("std").get<Vector>()};
  if (p.mean.size() != p.std.size()) fail(ErrorKind::SchemaMismatch, "scaler mean/std lengths differ");
  return p;
}

Json to_json(const CvReport& r) {
  Json folds = Json::array();
  for (const auto& f : r.folds) {
    folds.push_back({{"size", f.size},
                     {"r2", number_or_null(f.r2)},
                     {"rmse", f.rmse},
                     {"mse", f.mse},
                     {"tss", f.tss}});
  }
  return {{"weighted_mean_r2", number_or_null(r.weighted_mean_r2)},
          {"k", r.k},
          {"seed", r.seed},
          {"folds", std::move(folds)}};
}

Json encoding_table_json() {
  Json out = Json::object();
  for (const auto& e : encoding_table()) {
    Json codes = Json::object();
    for (const auto& [label, code] : e.codes) codes[label] = code;
    out[e.column] = std::move(codes);
  }
  return out;
}

Json model_to_json(const FittedModel& m) {
  return {{"format_version", kModelFormatVersion},
          {"model_kind", std::string(to_string(m.kind))},
          {"feature_names", kFeatureNames},
          {"params", regressor_params(m.regressor)},
          {"scaler", to_json(m.scaler)},
          {"encoding_table", encoding_table_json()}};
}

FittedModel model_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("format_version")) fail(ErrorKind::SchemaMismatch, "not a model document");
  if (!j.at("format_version").is_number_integer() || j.at("format_version").get<int>() != kModelFormatVersion)
    fail(ErrorKind::VersionMismatch, "unsupported model format_version " + j.at("format_version").dump());
  try {
    auto kind = parse_model_kind(j.at("model_kind").get<std::string>());
    if (!kind) fail(ErrorKind::SchemaMismatch, "unknown model_kind " + j.at("model_kind").dump());
    if (j.at("encoding_table") != encoding_table_json())
      fail(ErrorKind::SchemaMismatch, "model encoding table differs from this build's category codes");
    if (j.at("feature_names") != Json(kFeatureNames)) fail(ErrorKind::SchemaMismatch, "feature names differ");
    FittedModel m;
    m.kind = *kind;
    m.scaler = scaler_from_json(j.at("scaler"));
    if (m.scaler.mean.size() != kFeatureNames.size()) fail(ErrorKind::SchemaMismatch, "scaler width differs");
    m.regressor = regressor_from_json(*kind, j.at("params"));
    return m;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::SchemaMismatch, std::string("malformed model document: ") + e.what());
  }
}

void save_model(const FittedModel& m, const std::filesystem::path& path) {
  write_file_atomic(path, model_to_json(m).dump(2) + "\n");
}

FittedModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot open model file '" + path.string() + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::SchemaMismatch, "model file is not valid JSON: " + std::string(e.what()));
  }
  return model_from_json(j);
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorKind::Io, "cannot write '" + tmp.string() + "'");
    out << content;
    out.flush();
    if (!out) fail(ErrorKind::Io, "short write to '" + tmp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    fail(ErrorKind::Io, "cannot rename into '" + path.string() + "'");
  }
}

}  // namespace regress_bench
