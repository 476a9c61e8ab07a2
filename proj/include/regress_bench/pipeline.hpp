#pragma once

#include <cstddef>
#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "regress_bench/cross_validation.hpp"
#include "regress_bench/dataset.hpp"
#include "regress_bench/metrics.hpp"
#include "regress_bench/model.hpp"
#include "regress_bench/random.hpp"
#include "regress_bench/serialization.hpp"

namespace regress_bench {

inline constexpr double kDefaultOutlierThreshold = 17500.0;
// Row count reported for the charges <= 17,500 filter on the public file.
inline constexpr std::size_t kReferenceFilteredRows = 1017;

enum class CvScope { FilteredFull, TrainOnly };

std::string_view to_string(CvScope s);
std::optional<CvScope> parse_cv_scope(std::string_view text);

struct PipelineConfig {
  std::string input_path;
  double outlier_threshold = kDefaultOutlierThreshold;
  double split_ratio = kDefaultSplitRatio;
  std::uint64_t seed = kDefaultSeed;
  std::size_t k = kDefaultFolds;
  GbmParams gbm;
  SvrParams svr;
  CvScope cv_scope = CvScope::FilteredFull;
  std::string output_dir = "out";

  bool operator==(const PipelineConfig&) const = default;
};

// Flat `key = value` text; '#' starts a comment. Unknown keys and
// malformed values throw Config.
PipelineConfig parse_config(std::string_view text, PipelineConfig base = {});
PipelineConfig load_config(const std::filesystem::path& path, PipelineConfig base = {});
std::string format_config(const PipelineConfig& c);
// Throws Config when a value is out of range.
void validate(const PipelineConfig& c);
Json to_json(const PipelineConfig& c);

ModelSpec model_spec(const PipelineConfig& c, ModelKind kind);

struct RowCounts {
  std::size_t raw = 0;
  std::size_t filtered = 0;
  std::size_t train = 0;
  std::size_t test = 0;
};

struct ModelResult {
  ModelKind kind;
  MetricPair test;
  CvReport cv;
  std::optional<SvrModel> svr_fit;  // optimizer diagnostics for the SVR
};

struct EvalReport {
  PipelineConfig config;
  RowCounts counts;
  std::vector<ModelResult> models;  // kAllModels order
  std::string timestamp;
};

// filter -> encode -> split -> fit the three models on the training rows ->
// test metrics -> k-fold CV. Deterministic given (data, config).
EvalReport run_experiment(const Dataset& raw, const PipelineConfig& config);

// Same filter/encode/split as run_experiment; fits one model on the train rows.
FittedModel train_model(const Dataset& raw, const PipelineConfig& config, ModelKind kind);

Json report_to_json(const EvalReport& r);
// Plain-text test-split table (r2, RMSE) followed by the CV table.
std::string render_tables(const EvalReport& r);

// Per-fold (r2, rmse) points, sorted by (model order, fold).
Json scatter_points(const Json& report);

struct EdaResult {
  std::size_t raw_rows = 0;
  std::size_t filtered_rows = 0;
  double threshold = kDefaultOutlierThreshold;
  // group column -> summaries, before and after filtering
  std::vector<std::pair<std::string, std::vector<GroupSummary>>> pre_filter;
  std::vector<std::pair<std::string, std::vector<GroupSummary>>> post_filter;
  BoxPlotSummary smoker_yes;
  BoxPlotSummary smoker_no;
  bool smoker_separated = false;
};

inline constexpr std::array<std::string_view, 4> kEdaGroups{"region", "children", "sex", "smoker"};

EdaResult run_eda(const Dataset& raw, double threshold);
Json to_json(const EdaResult& r);
std::string render_box_svg(const std::string& title, const std::vector<GroupSummary>& groups);

std::string utc_timestamp();

}  // namespace regress_bench
