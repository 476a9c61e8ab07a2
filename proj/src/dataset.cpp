#include "regress_bench/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "regress_bench/error.hpp"

namespace regress_bench {

namespace {

constexpr std::array<std::string_view, 2> kSexNames{"female", "male"};
constexpr std::array<std::string_view, 2> kSmokerNames{"no", "yes"};
constexpr std::array<std::string_view, 4> kRegionNames{"northeast", "northwest", "southeast", "southwest"};

std::string_view trim(std::string_view s) {
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) == std::tolower(static_cast<unsigned char>(y));
         });
}

template <typename Enum, std::size_t N>
std::optional<Enum> lookup(std::string_view text, const std::array<std::string_view, N>& names) {
  text = trim(text);
  for (std::size_t i = 0; i < N; ++i)
    if (iequals(text, names[i])) return static_cast<Enum>(i);
  return std::nullopt;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = line.find(',', start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

std::int64_t parse_int(std::string_view field, std::string_view column, std::size_t row) {
  auto text = trim(field);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    throw Error(ErrorKind::ParseError, "column '" + std::string(column) + "': not an integer: '" + std::string(field) + "'",
                row);
  return v;
}

double parse_real(std::string_view field, std::string_view column, std::size_t row) {
  auto text = trim(field);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v, std::chars_format::general);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v))
    throw Error(ErrorKind::ParseError, "column '" + std::string(column) + "': not a number: '" + std::string(field) + "'",
                row);
  return v;
}

template <typename Enum>
Enum require_category(std::optional<Enum> v, std::string_view field, std::string_view column, std::size_t row) {
  if (!v)
    throw Error(ErrorKind::ParseError,
                "column '" + std::string(column) + "': unknown category '" + std::string(trim(field)) + "'", row);
  return *v;
}

void check_range(bool ok, std::string_view column, std::string_view rule, std::size_t row) {
  if (!ok) throw Error(ErrorKind::ParseError, "column '" + std::string(column) + "' must be " + std::string(rule), row);
}

}  // namespace

std::string_view to_string(Sex v) { return kSexNames[static_cast<std::size_t>(v)]; }
std::string_view to_string(Smoker v) { return kSmokerNames[static_cast<std::size_t>(v)]; }
std::string_view to_string(Region v) { return kRegionNames[static_cast<std::size_t>(v)]; }

std::string_view to_string(ColumnType t) {
  switch (t) {
    case ColumnType::Integer: return "int";
    case ColumnType::Real: return "float";
    case ColumnType::Category: return "category";
  }
  return "unknown";
}

std::optional<Sex> parse_sex(std::string_view text) { return lookup<Sex>(text, kSexNames); }
std::optional<Smoker> parse_smoker(std::string_view text) { return lookup<Smoker>(text, kSmokerNames); }
std::optional<Region> parse_region(std::string_view text) { return lookup<Region>(text, kRegionNames); }

void Dataset::push_back(const Record& r) {
  age_.push_back(r.age);
  sex_.push_back(r.sex);
  bmi_.push_back(r.bmi);
  children_.push_back(r.children);
  smoker_.push_back(r.smoker);
  region_.push_back(r.region);
  if (has_target_) charges_.push_back(r.charges);
}

Record Dataset::record(std::size_t i) const {
  return Record{age_[i], sex_[i], bmi_[i], children_[i], smoker_[i], region_[i], has_target_ ? charges_[i] : 0.0};
}

ColumnType Dataset::column_type(std::string_view name) const {
  for (const auto& c : kSchema) {
    if (c.name != name) continue;
    if (name == kTargetColumn && !has_target_) break;
    return c.type;
  }
  fail(ErrorKind::UnknownColumn, "no column named '" + std::string(name) + "'");
}

std::vector<double> Dataset::numeric(std::string_view name) const {
  auto type = column_type(name);
  if (type == ColumnType::Category)
    fail(ErrorKind::TypeMismatch, "column '" + std::string(name) + "' is categorical, not numeric");
  if (name == "age") return {age_.begin(), age_.end()};
  if (name == "children") return {children_.begin(), children_.end()};
  if (name == "bmi") return bmi_;
  return charges_;
}

std::vector<std::string> Dataset::labels(std::string_view name) const {
  auto type = column_type(name);
  if (type == ColumnType::Real)
    fail(ErrorKind::TypeMismatch, "column '" + std::string(name) + "' is real-valued and cannot be grouped");
  std::vector<std::string> out;
  out.reserve(n_rows());
  for (std::size_t i = 0; i < n_rows(); ++i) {
    if (name == "age") out.push_back(std::to_string(age_[i]));
    else if (name == "children") out.push_back(std::to_string(children_[i]));
    else if (name == "sex") out.emplace_back(to_string(sex_[i]));
    else if (name == "smoker") out.emplace_back(to_string(smoker_[i]));
    else out.emplace_back(to_string(region_[i]));
  }
  return out;
}

Dataset Dataset::select(std::span<const std::size_t> rows) const {
  Dataset out(has_target_);
  for (auto i : rows) out.push_back(record(i));
  return out;
}

Dataset parse_csv(std::istream& in, const CsvOptions& options) {
  const std::size_t n_fields = options.require_target ? kSchema.size() : kSchema.size() - 1;

  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!trim(line).empty()) {
      have_header = true;
      break;
    }
  }
  if (!have_header) fail(ErrorKind::MissingHeader, "input is empty");

  std::string_view header = line;
  if (header.starts_with("\xEF\xBB\xBF")) header.remove_prefix(3);
  auto names = split_fields(header);
  bool header_ok = names.size() == n_fields;
  for (std::size_t i = 0; header_ok && i < n_fields; ++i) header_ok = iequals(trim(names[i]), kSchema[i].name);
  if (!header_ok) {
    std::string expected;
    for (std::size_t i = 0; i < n_fields; ++i) expected += (i ? "," : "") + std::string(kSchema[i].name);
    fail(ErrorKind::MissingHeader, "expected header '" + expected + "', got '" + std::string(header) + "'");
  }

  Dataset d(options.require_target);
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    ++row;
    auto f = split_fields(line);
    if (f.size() != n_fields)
      throw Error(ErrorKind::RowArity,
                  "expected " + std::to_string(n_fields) + " fields, got " + std::to_string(f.size()), row);

    Record r;
    r.age = parse_int(f[0], "age", row);
    r.sex = require_category(parse_sex(f[1]), f[1], "sex", row);
    r.bmi = parse_real(f[2], "bmi", row);
    r.children = parse_int(f[3], "children", row);
    r.smoker = require_category(parse_smoker(f[4]), f[4], "smoker", row);
    r.region = require_category(parse_region(f[5]), f[5], "region", row);
    if (options.require_target) r.charges = parse_real(f[6], "charges", row);

    check_range(r.age >= 0, "age", ">= 0", row);
    check_range(r.bmi > 0, "bmi", "> 0", row);
    check_range(r.children >= 0, "children", ">= 0", row);
    check_range(r.charges >= 0, "charges", ">= 0", row);
    d.push_back(r);
  }
  return d;
}

Dataset parse_csv_text(std::string_view text, const CsvOptions& options) {
  std::istringstream in{std::string(text)};
  return parse_csv(in, options);
}

Dataset read_csv_file(const std::filesystem::path& path, const CsvOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Io, "cannot open '" + path.string() + "'");
  return parse_csv(in, options);
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

void write_csv(std::ostream& out, const Dataset& d) {
  const std::size_t n_fields = d.has_target() ? kSchema.size() : kSchema.size() - 1;
  for (std::size_t i = 0; i < n_fields; ++i) out << (i ? "," : "") << kSchema[i].name;
  out << '\n';
  for (std::size_t i = 0; i < d.n_rows(); ++i) {
    auto r = d.record(i);
    out << r.age << ',' << to_string(r.sex) << ',' << format_double(r.bmi) << ',' << r.children << ','
        << to_string(r.smoker) << ',' << to_string(r.region);
    if (d.has_target()) out << ',' << format_double(r.charges);
    out << '\n';
  }
}

std::size_t SchemaReport::numeric_columns() const {
  return static_cast<std::size_t>(
      std::count_if(columns.begin(), columns.end(), [](const auto& c) { return c.type != ColumnType::Category; }));
}

std::size_t SchemaReport::category_columns() const { return columns.size() - numeric_columns(); }

SchemaReport schema_report(const Dataset& d) {
  SchemaReport report;
  report.n_rows = d.n_rows();
  for (const auto& c : kSchema) {
    if (c.name == kTargetColumn && !d.has_target()) continue;
    ColumnSummary s{std::string(c.name), c.type, d.n_rows(), 0};
    if (c.type == ColumnType::Category) {
      auto labels = d.labels(c.name);
      s.distinct = std::set<std::string>(labels.begin(), labels.end()).size();
    }
    report.columns.push_back(std::move(s));
  }
  return report;
}

}  // namespace regress_bench
