#include "regress_bench/pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "regress_bench/eda.hpp"
#include "regress_bench/error.hpp"
#include "regress_bench/preprocess.hpp"

namespace regress_bench {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

template <typename T>
T parse_value(std::string_view key, std::string_view text) {
  T v{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    fail(ErrorKind::Config, "bad value for '" + std::string(key) + "': '" + std::string(text) + "'");
  return v;
}

struct Prepared {
  std::size_t raw_rows = 0;
  Dataset filtered;
  EncodedMatrix encoded;
  Split split;
};

Prepared prepare(const Dataset& raw, const PipelineConfig& config) {
  validate(config);
  Prepared p;
  p.raw_rows = raw.n_rows();
  p.filtered = filter_threshold(raw, kTargetColumn, config.outlier_threshold);
  p.encoded = encode(p.filtered);
  p.split = split(p.encoded, config.split_ratio, config.seed);
  return p;
}

std::string fixed(double v, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string score_cell(double r2) {
  if (!std::isfinite(r2)) return "n/a";
  return fixed(r2, 3) + " / " + std::to_string(static_cast<long long>(std::llround(r2 * 100.0))) + "%";
}

}  // namespace

std::string_view to_string(CvScope s) { return s == CvScope::FilteredFull ? "filtered_full" : "train_only"; }

std::optional<CvScope> parse_cv_scope(std::string_view text) {
  if (text == "filtered_full") return CvScope::FilteredFull;
  if (text == "train_only") return CvScope::TrainOnly;
  return std::nullopt;
}

PipelineConfig parse_config(std::string_view text, PipelineConfig c) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body = line;
    if (auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    body = trim(body);
    if (body.empty()) continue;
    auto eq = body.find('=');
    if (eq == std::string_view::npos)
      fail(ErrorKind::Config, "line " + std::to_string(line_no) + ": expected 'key = value'");
    const auto key = trim(body.substr(0, eq));
    const auto value = trim(body.substr(eq + 1));

    if (key == "input") c.input_path = std::string(value);
    else if (key == "output_dir") c.output_dir = std::string(value);
    else if (key == "outlier_threshold") c.outlier_threshold = parse_value<double>(key, value);
    else if (key == "split_ratio") c.split_ratio = parse_value<double>(key, value);
    else if (key == "seed") c.seed = parse_value<std::uint64_t>(key, value);
    else if (key == "k") c.k = parse_value<std::size_t>(key, value);
    else if (key == "cv_scope") {
      auto s = parse_cv_scope(value);
      if (!s) fail(ErrorKind::Config, "cv_scope must be filtered_full or train_only");
      c.cv_scope = *s;
    } else if (key == "gbm.n_estimators") c.gbm.n_estimators = parse_value<int>(key, value);
    else if (key == "gbm.learning_rate") c.gbm.learning_rate = parse_value<double>(key, value);
    else if (key == "gbm.max_depth") c.gbm.max_depth = parse_value<int>(key, value);
    else if (key == "gbm.min_samples_leaf") c.gbm.min_samples_leaf = parse_value<int>(key, value);
    else if (key == "svr.c") c.svr.c = parse_value<double>(key, value);
    else if (key == "svr.epsilon") c.svr.epsilon = parse_value<double>(key, value);
    else if (key == "svr.max_iters") c.svr.max_iters = parse_value<int>(key, value);
    else if (key == "svr.tol") c.svr.tol = parse_value<double>(key, value);
    else fail(ErrorKind::Config, "line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'");
  }
  return c;
}

PipelineConfig load_config(const std::filesystem::path& path, PipelineConfig base) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot open config '" + path.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), std::move(base));
}

std::string format_config(const PipelineConfig& c) {
  std::ostringstream os;
  os << "input = " << c.input_path << '\n'
     << "output_dir = " << c.output_dir << '\n'
     << "outlier_threshold = " << format_double(c.outlier_threshold) << '\n'
     << "split_ratio = " << format_double(c.split_ratio) << '\n'
     << "seed = " << c.seed << '\n'
     << "k = " << c.k << '\n'
     << "cv_scope = " << to_string(c.cv_scope) << '\n'
     << "gbm.n_estimators = " << c.gbm.n_estimators << '\n'
     << "gbm.learning_rate = " << format_double(c.gbm.learning_rate) << '\n'
     << "gbm.max_depth = " << c.gbm.max_depth << '\n'
     << "gbm.min_samples_leaf = " << c.gbm.min_samples_leaf << '\n'
     << "svr.c = " << format_double(c.svr.c) << '\n'
     << "svr.epsilon = " << format_double(c.svr.epsilon) << '\n'
     << "svr.max_iters = " << c.svr.max_iters << '\n'
     << "svr.tol = " << format_double(c.svr.tol) << '\n';
  return os.str();
}

void validate(const PipelineConfig& c) {
  if (std::isnan(c.outlier_threshold)) fail(ErrorKind::Config, "outlier_threshold is NaN");
  if (!(c.split_ratio > 0.0 && c.split_ratio < 1.0)) fail(ErrorKind::Config, "split_ratio must lie in (0, 1)");
  if (c.k < 2) fail(ErrorKind::Config, "k must be >= 2");
  if (c.gbm.n_estimators < 1 || !(c.gbm.learning_rate > 0.0) || c.gbm.max_depth < 0 || c.gbm.min_samples_leaf < 1)
    fail(ErrorKind::Config, "invalid gradient boosting hyperparameters");
  if (!(c.svr.c > 0.0) || !(c.svr.epsilon >= 0.0) || c.svr.max_iters < 1 || !(c.svr.tol >= 0.0))
    fail(ErrorKind::Config, "invalid SVR hyperparameters");
}

Json to_json(const PipelineConfig& c) {
  return {{"input", c.input_path},
          {"outlier_threshold", c.outlier_threshold},
          {"split_ratio", c.split_ratio},
          {"seed", c.seed},
          {"k", c.k},
          {"cv_scope", std::string(to_string(c.cv_scope))},
          {"gbm",
           {{"n_estimators", c.gbm.n_estimators},
            {"learning_rate", c.gbm.learning_rate},
            {"max_depth", c.gbm.max_depth},
            {"min_samples_leaf", c.gbm.min_samples_leaf}}},
          {"svr", {{"c", c.svr.c}, {"epsilon", c.svr.epsilon}, {"max_iters", c.svr.max_iters}, {"tol", c.svr.tol}}}};
}

ModelSpec model_spec(const PipelineConfig& c, ModelKind kind) { return ModelSpec{kind, c.gbm, c.svr}; }

EvalReport run_experiment(const Dataset& raw, const PipelineConfig& config) {
  const auto p = prepare(raw, config);

  EvalReport report;
  report.config = config;
  report.counts = {p.raw_rows, p.filtered.n_rows(), p.split.x_train.rows(), p.split.x_test.rows()};

  const Matrix& cv_x = config.cv_scope == CvScope::FilteredFull ? p.encoded.x : p.split.x_train;
  const Vector& cv_y = config.cv_scope == CvScope::FilteredFull ? p.encoded.y : p.split.y_train;

  for (auto kind : kAllModels) {
    const auto spec = model_spec(config, kind);
    ModelResult result{kind, {}, {}, std::nullopt};
    const auto model = fit_model(spec, p.split.x_train, p.split.y_train);
    result.test = score(p.split.y_test, model.predict(p.split.x_test));
    if (const auto* svr = std::get_if<SvrModel>(&model.regressor)) result.svr_fit = *svr;
    result.cv = cross_validate(spec, cv_x, cv_y, config.k, config.seed);
    report.models.push_back(std::move(result));
  }
  report.timestamp = utc_timestamp();
  return report;
}

FittedModel train_model(const Dataset& raw, const PipelineConfig& config, ModelKind kind) {
  const auto p = prepare(raw, config);
  return fit_model(model_spec(config, kind), p.split.x_train, p.split.y_train);
}

Json report_to_json(const EvalReport& r) {
  Json models = Json::array();
  for (const auto& m : r.models) {
    Json entry = {{"kind", std::string(to_string(m.kind))},
                  {"r2", m.test.r2},
                  {"rmse", m.test.rmse},
                  {"cv", to_json(m.cv)}};
    if (m.svr_fit)
      entry["optimizer"] = {{"converged", m.svr_fit->converged},
                            {"iterations", m.svr_fit->iterations},
                            {"objective", m.svr_fit->objective}};
    models.push_back(std::move(entry));
  }
  return {{"config", to_json(r.config)},
          {"counts",
           {{"raw", r.counts.raw}, {"filtered", r.counts.filtered}, {"train", r.counts.train}, {"test", r.counts.test}}},
          {"models", std::move(models)},
          {"timestamp", r.timestamp}};
}

std::string render_tables(const EvalReport& r) {
  std::ostringstream os;
  os << "r2 and RMSE (test split: " << r.counts.test << " of " << r.counts.filtered << " rows)\n\n";
  os << pad("Regression Models", 26) << pad("r2 (R Square)", 18) << "RMSE (Root Mean Square)\n";
  for (const auto& m : r.models)
    os << pad(std::string(display_name(m.kind)), 26) << pad(score_cell(m.test.r2), 18) << fixed(m.test.rmse, 3) << '\n';
  os << '\n';
  const std::size_t k = r.models.empty() ? r.config.k : r.models.front().cv.k;
  os << k << "-Fold Cross-validation weighted mean (" << to_string(r.config.cv_scope) << ")\n\n";
  os << pad("Regression Models", 26) << "K-Fold Cross-Validation\n";
  for (const auto& m : r.models)
    os << pad(std::string(display_name(m.kind)), 26) << score_cell(m.cv.weighted_mean_r2) << '\n';
  return os.str();
}

Json scatter_points(const Json& report) {
  Json points = Json::array();
  for (const auto& m : report.at("models")) {
    const auto& folds = m.at("cv").at("folds");
    for (std::size_t f = 0; f < folds.size(); ++f) {
      const auto& fold = folds[f];
      points.push_back({{"model", m.at("kind")},
                        {"fold", f},
                        {"r2", fold.at("r2")},
                        {"rmse", fold.at("rmse")},
                        {"size", fold.at("size")},
                        {"tss", fold.at("tss")}});
    }
  }
  return {{"points", std::move(points)}};
}

EdaResult run_eda(const Dataset& raw, double threshold) {
  EdaResult r;
  r.threshold = threshold;
  r.raw_rows = raw.n_rows();
  const auto filtered = filter_threshold(raw, kTargetColumn, threshold);
  r.filtered_rows = filtered.n_rows();
  for (auto g : kEdaGroups) {
    if (raw.n_rows() > 0) r.pre_filter.emplace_back(std::string(g), grouped_box(raw, kTargetColumn, g));
    if (filtered.n_rows() > 0) r.post_filter.emplace_back(std::string(g), grouped_box(filtered, kTargetColumn, g));
  }

  if (filtered.n_rows() > 0) {
    const auto smoker = grouped_box(filtered, kTargetColumn, "smoker");
    const GroupSummary* yes = nullptr;
    const GroupSummary* no = nullptr;
    for (const auto& g : smoker) (g.group == "yes" ? yes : no) = &g;
    if (yes && no) {
      r.smoker_yes = yes->summary;
      r.smoker_no = no->summary;
      r.smoker_separated = median_separation(yes->summary, no->summary);
    }
  }
  return r;
}

Json to_json(const EdaResult& r) {
  auto stage = [](const auto& groups) {
    Json out = Json::object();
    for (const auto& [name, summaries] : groups) out[name] = to_json(summaries);
    return out;
  };
  return {{"value_column", std::string(kTargetColumn)},
          {"threshold", r.threshold},
          {"counts", {{"raw", r.raw_rows}, {"filtered", r.filtered_rows}}},
          {"pre_filter", stage(r.pre_filter)},
          {"post_filter", stage(r.post_filter)},
          {"smoker_separation",
           {{"separated", r.smoker_separated},
            {"yes_median", r.smoker_yes.median},
            {"no_q1", r.smoker_no.q1},
            {"no_q3", r.smoker_no.q3},
            {"no_median", r.smoker_no.median},
            {"yes_q1", r.smoker_yes.q1},
            {"yes_q3", r.smoker_yes.q3}}}};
}

std::string render_box_svg(const std::string& title, const std::vector<GroupSummary>& groups) {
  constexpr double width = 640, height = 400, left = 70, right = 20, top = 40, bottom = 50;
  double lo = 0.0, hi = 1.0;
  bool first = true;
  for (const auto& g : groups) {
    double a = g.summary.whisker_low, b = g.summary.whisker_high;
    for (double o : g.summary.outliers) a = std::min(a, o), b = std::max(b, o);
    lo = first ? a : std::min(lo, a);
    hi = first ? b : std::max(hi, b);
    first = false;
  }
  if (hi <= lo) hi = lo + 1.0;
  const double plot_h = height - top - bottom;
  auto ypos = [&](double v) { return top + plot_h * (hi - v) / (hi - lo); };
  const double slot = (width - left - right) / static_cast<double>(std::max<std::size_t>(groups.size(), 1));

  std::ostringstream os;
  os << std::fixed << std::setprecision(1);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
  os << "<text x=\"" << width / 2 << "\" y=\"20\" text-anchor=\"middle\" font-family=\"sans-serif\">" << title
     << "</text>\n";
  os << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << height - bottom
     << "\" stroke=\"black\"/>\n";
  for (int t = 0; t <= 4; ++t) {
    const double v = lo + (hi - lo) * t / 4.0;
    os << "<text x=\"" << left - 5 << "\" y=\"" << ypos(v) + 4 << "\" text-anchor=\"end\" font-size=\"10\">"
       << static_cast<long long>(std::llround(v)) << "</text>\n";
  }
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const auto& s = groups[i].summary;
    const double cx = left + slot * (static_cast<double>(i) + 0.5);
    const double half = slot * 0.25;
    os << "<line x1=\"" << cx << "\" y1=\"" << ypos(s.whisker_high) << "\" x2=\"" << cx << "\" y2=\"" << ypos(s.q3)
       << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << cx << "\" y1=\"" << ypos(s.q1) << "\" x2=\"" << cx << "\" y2=\"" << ypos(s.whisker_low)
       << "\" stroke=\"black\"/>\n";
    os << "<rect x=\"" << cx - half << "\" y=\"" << ypos(s.q3) << "\" width=\"" << 2 * half << "\" height=\""
       << std::max(ypos(s.q1) - ypos(s.q3), 0.5) << "\" fill=\"#9ecae1\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << cx - half << "\" y1=\"" << ypos(s.median) << "\" x2=\"" << cx + half << "\" y2=\""
       << ypos(s.median) << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    for (double o : s.outliers)
      os << "<circle cx=\"" << cx << "\" cy=\"" << ypos(o) << "\" r=\"2\" fill=\"none\" stroke=\"black\"/>\n";
    os << "<text x=\"" << cx << "\" y=\"" << height - bottom + 18 << "\" text-anchor=\"middle\" font-size=\"12\">"
       << groups[i].group << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace regress_bench
