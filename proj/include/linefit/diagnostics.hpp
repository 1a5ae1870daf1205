#pragma once

#include <optional>
#include <string_view>

#include "linefit/fitters.hpp"
#include "linefit/stats.hpp"

namespace linefit {

enum class OrderingE { kHolds, kEquality, kViolated, kNotApplicable };

enum class OrderingF { kHolds, kViolated, kConditionNotMet, kNotApplicable };

std::string_view to_string(OrderingE status);
std::string_view to_string(OrderingF status);

/// Slope of the perpendicular-offset line as seen in (x, y) coordinates.
struct DSlope {
  enum class Kind { kValue, kVertical, kAllLines };
  Kind kind = Kind::kValue;
  double value = 0.0;  // meaningful for kValue only
};

/// Comparison of the three regression lines on one sample.
///
/// slope_x is the X-method line's slope in (x, y) coordinates, var_y / cov.
/// ordering_e checks |m| <= sqrt(var_y / var_x) <= |slope_x|; ordering_f
/// checks |m| <= |tan theta| <= |slope_x|, which is only guaranteed in cases
/// I, II, V, VI, or in III/IV when 2 cov^2 >= var_x |var_x - var_y|.
struct ComparisonReport {
  std::optional<double> slope_y;
  std::optional<double> slope_x;
  DSlope slope_d;
  std::optional<double> ratio_bound;
  OrderingE ordering_e = OrderingE::kNotApplicable;
  OrderingF ordering_f = OrderingF::kNotApplicable;
  /// When the gate for ordering_f is not met, whether the ordering was
  /// nevertheless observed. Informational only.
  std::optional<bool> ordering_f_observed;
  CaseTag d_case = CaseTag::kIsotropic;
  double cs_gap = 0.0;
  bool collinear = false;
};

/// Tolerance below which the Cauchy-Schwarz gap counts as zero.
double collinearity_tolerance(const SummaryStats& s);

ComparisonReport compare(const SummaryStats& s);
ComparisonReport compare(const PairedSample& p);

}  // namespace linefit
