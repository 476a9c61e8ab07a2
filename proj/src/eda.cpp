#include "regress_bench/eda.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "regress_bench/error.hpp"

namespace regress_bench {

namespace {

std::vector<double> sorted_copy(std::span<const double> values) {
  if (values.empty()) fail(ErrorKind::EmptyInput, "summary of an empty sample");
  std::vector<double> v(values.begin(), values.end());
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

double quantile_sorted(std::span<const double> sorted, double p) {
  const double pos = p * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

Quartiles quartiles(std::span<const double> values) {
  auto v = sorted_copy(values);
  return {quantile_sorted(v, 0.25), quantile_sorted(v, 0.5), quantile_sorted(v, 0.75)};
}

BoxPlotSummary box_summary(std::span<const double> values) {
  auto v = sorted_copy(values);
  BoxPlotSummary s;
  s.n = v.size();
  s.q1 = quantile_sorted(v, 0.25);
  s.median = quantile_sorted(v, 0.5);
  s.q3 = quantile_sorted(v, 0.75);
  s.iqr = s.q3 - s.q1;
  s.lower_fence = s.q1 - kFenceMultiplier * s.iqr;
  s.upper_fence = s.q3 + kFenceMultiplier * s.iqr;

  bool any_inside = false;
  for (double x : v) {
    if (x < s.lower_fence || x > s.upper_fence) {
      s.outliers.push_back(x);
      continue;
    }
    if (!any_inside) s.whisker_low = x;
    s.whisker_high = x;
    any_inside = true;
  }
  return s;
}

std::vector<GroupSummary> grouped_box(const Dataset& d, std::string_view value_col, std::string_view group_col) {
  if (d.column_type(value_col) == ColumnType::Category)
    fail(ErrorKind::TypeMismatch, "value column '" + std::string(value_col) + "' is not numeric");
  const auto values = d.numeric(value_col);
  const auto labels = d.labels(group_col);
  const bool integer_groups = d.column_type(group_col) == ColumnType::Integer;

  // Ordering key: category code or integer value, so groups come out in a
  // natural order rather than lexicographic.
  std::map<long long, std::pair<std::string, std::vector<double>>> groups;
  for (std::size_t i = 0; i < values.size(); ++i) {
    long long key = 0;
    if (integer_groups) key = std::stoll(labels[i]);
    else if (group_col == "sex") key = static_cast<long long>(d.sex()[i]);
    else if (group_col == "smoker") key = static_cast<long long>(d.smoker()[i]);
    else key = static_cast<long long>(d.region()[i]);
    auto& slot = groups[key];
    slot.first = labels[i];
    slot.second.push_back(values[i]);
  }

  std::vector<GroupSummary> out;
  out.reserve(groups.size());
  for (auto& [key, g] : groups) out.push_back({g.first, box_summary(g.second)});
  return out;
}

Dataset filter_threshold(const Dataset& d, std::string_view col, double max_value) {
  const auto values = d.numeric(col);
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] <= max_value) keep.push_back(i);
  return d.select(keep);
}

bool median_separation(const BoxPlotSummary& a, const BoxPlotSummary& b) {
  auto in_box = [](double m, const BoxPlotSummary& s) { return m >= s.q1 && m <= s.q3; };
  return !in_box(a.median, b) && !in_box(b.median, a);
}

}  // namespace regress_bench
