#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace regress_bench {

enum class Sex : std::uint8_t { Female, Male };
enum class Smoker : std::uint8_t { No, Yes };
enum class Region : std::uint8_t { Northeast, Northwest, Southeast, Southwest };

std::string_view to_string(Sex v);
std::string_view to_string(Smoker v);
std::string_view to_string(Region v);

// Case-insensitive, whitespace-trimmed lookups; nullopt for unknown values.
std::optional<Sex> parse_sex(std::string_view text);
std::optional<Smoker> parse_smoker(std::string_view text);
std::optional<Region> parse_region(std::string_view text);

struct Record {
  std::int64_t age = 0;
  Sex sex = Sex::Female;
  double bmi = 0.0;
  std::int64_t children = 0;
  Smoker smoker = Smoker::No;
  Region region = Region::Northeast;
  double charges = 0.0;

  bool operator==(const Record&) const = default;
};

enum class ColumnType { Integer, Real, Category };

std::string_view to_string(ColumnType t);

struct ColumnInfo {
  std::string_view name;
  ColumnType type;
};

// Fixed column order of the medical-cost file.
inline constexpr std::array<ColumnInfo, 7> kSchema{{
    {"age", ColumnType::Integer},
    {"sex", ColumnType::Category},
    {"bmi", ColumnType::Real},
    {"children", ColumnType::Integer},
    {"smoker", ColumnType::Category},
    {"region", ColumnType::Category},
    {"charges", ColumnType::Real},
}};

inline constexpr std::string_view kTargetColumn = "charges";

// Column-oriented insurance table. A dataset read from a records-only file
// (no charges column) reports has_target() == false and has no charges.
class Dataset {
 public:
  explicit Dataset(bool has_target = true) : has_target_(has_target) {}

  std::size_t n_rows() const noexcept { return age_.size(); }
  bool has_target() const noexcept { return has_target_; }

  void push_back(const Record& r);
  Record record(std::size_t i) const;

  std::span<const std::int64_t> age() const { return age_; }
  std::span<const Sex> sex() const { return sex_; }
  std::span<const double> bmi() const { return bmi_; }
  std::span<const std::int64_t> children() const { return children_; }
  std::span<const Smoker> smoker() const { return smoker_; }
  std::span<const Region> region() const { return region_; }
  std::span<const double> charges() const { return charges_; }

  // Looks up a column by name. Throws UnknownColumn.
  ColumnType column_type(std::string_view name) const;
  // Integer or real column as doubles. Throws UnknownColumn, TypeMismatch.
  std::vector<double> numeric(std::string_view name) const;
  // Category or integer column rendered as labels. Throws UnknownColumn,
  // TypeMismatch for real-valued columns.
  std::vector<std::string> labels(std::string_view name) const;

  Dataset select(std::span<const std::size_t> rows) const;

  bool operator==(const Dataset&) const = default;

 private:
  bool has_target_;
  std::vector<std::int64_t> age_;
  std::vector<Sex> sex_;
  std::vector<double> bmi_;
  std::vector<std::int64_t> children_;
  std::vector<Smoker> smoker_;
  std::vector<Region> region_;
  std::vector<double> charges_;
};

struct CsvOptions {
  // When false the header must stop before `charges` (prediction input).
  bool require_target = true;
};

Dataset parse_csv(std::istream& in, const CsvOptions& options = {});
Dataset parse_csv_text(std::string_view text, const CsvOptions& options = {});
Dataset read_csv_file(const std::filesystem::path& path, const CsvOptions& options = {});

// Canonical form with lowercase categories and shortest round-trip numbers.
void write_csv(std::ostream& out, const Dataset& d);

struct ColumnSummary {
  std::string name;
  ColumnType type;
  std::size_t non_null = 0;
  std::size_t distinct = 0;  // categories only; 0 for numeric columns
};

struct SchemaReport {
  std::size_t n_rows = 0;
  std::vector<ColumnSummary> columns;

  std::size_t numeric_columns() const;
  std::size_t category_columns() const;
};

SchemaReport schema_report(const Dataset& d);

// Shortest decimal text that parses back to exactly `v`.
std::string format_double(double v);

}  // namespace regress_bench
