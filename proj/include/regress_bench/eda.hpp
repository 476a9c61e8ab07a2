#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "regress_bench/dataset.hpp"

namespace regress_bench {

inline constexpr double kFenceMultiplier = 1.5;

struct Quartiles {
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
};

// Tukey box-plot summary of one numeric sample.
struct BoxPlotSummary {
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double iqr = 0.0;
  double lower_fence = 0.0;
  double upper_fence = 0.0;
  double whisker_low = 0.0;
  double whisker_high = 0.0;
  std::vector<double> outliers;  // ascending
  std::size_t n = 0;

  bool operator==(const BoxPlotSummary&) const = default;
};

struct GroupSummary {
  std::string group;
  BoxPlotSummary summary;
};

// Sample quantile by linear interpolation between order statistics at
// position p * (n - 1). `sorted` must be ascending and non-empty.
double quantile_sorted(std::span<const double> sorted, double p);

Quartiles quartiles(std::span<const double> values);
BoxPlotSummary box_summary(std::span<const double> values);

// One summary per distinct value of `group_col`, in category order for
// categorical columns and ascending order for integer columns.
std::vector<GroupSummary> grouped_box(const Dataset& d, std::string_view value_col, std::string_view group_col);

// Rows whose `col` value is <= max_value, original order preserved.
Dataset filter_threshold(const Dataset& d, std::string_view col, double max_value);

// True when each median lies outside the other group's interquartile box.
bool median_separation(const BoxPlotSummary& a, const BoxPlotSummary& b);

}  // namespace regress_bench
