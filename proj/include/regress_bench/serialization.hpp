#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "regress_bench/cross_validation.hpp"
#include "regress_bench/eda.hpp"
#include "regress_bench/model.hpp"
#include "regress_bench/preprocess.hpp"

namespace regress_bench {

using Json = nlohmann::ordered_json;

inline constexpr int kModelFormatVersion = 1;

Json to_json(const BoxPlotSummary& s);
Json to_json(const std::vector<GroupSummary>& groups);
Json to_json(const ScalerParams& p);
Json to_json(const CvReport& r);
Json encoding_table_json();

ScalerParams scaler_from_json(const Json& j);
BoxPlotSummary box_summary_from_json(const Json& j);

// Versioned model document:
// {format_version, model_kind, feature_names, params, scaler, encoding_table}
Json model_to_json(const FittedModel& m);
// Throws VersionMismatch for an unknown format_version, SchemaMismatch when
// the document is malformed or its encoding table differs from ours.
FittedModel model_from_json(const Json& j);

void save_model(const FittedModel& m, const std::filesystem::path& path);
FittedModel load_model(const std::filesystem::path& path);

// Writes via a temporary sibling and renames, so readers never observe a
// partially written file. Throws Io.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace regress_bench
