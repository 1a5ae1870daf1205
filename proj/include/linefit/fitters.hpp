#pragma once

#include <optional>
#include <string_view>
#include <variant>

#include "linefit/geometry.hpp"
#include "linefit/stats.hpp"

namespace linefit {

/// Y: vertical offsets, X: horizontal offsets, D: perpendicular distances.
enum class Method { kY, kX, kD };

std::string_view to_string(Method method);
std::optional<Method> parse_method(std::string_view text);

/// Sign pattern of (var_x - var_y, cov_xy) that selects the closed form for
/// the perpendicular-offset angle.
///
///   I    var_x > var_y, cov >= 0     0      <= theta <  pi/4
///   II   var_x > var_y, cov <  0    -pi/4   <  theta <  0
///   III  var_x < var_y, cov >= 0     pi/4   <  theta <= pi/2
///   IV   var_x < var_y, cov <  0    -pi/2   <  theta < -pi/4
///   V    var_x = var_y, cov >  0     theta = pi/4
///   VI   var_x = var_y, cov <  0     theta = -pi/4
///   Isotropic  var_x = var_y, cov = 0, every angle is optimal
///
/// At cov = 0 the overlapping conditions resolve to I and III.
enum class CaseTag { kI, kII, kIII, kIV, kV, kVI, kIsotropic };

std::string_view to_string(CaseTag tag);

struct OrthogonalCase {
  CaseTag tag = CaseTag::kIsotropic;
  /// 2 cov / (var_x - var_y); absent when var_x = var_y.
  std::optional<double> e_ratio;
};

struct AngleSolution {
  double cos_theta;
  double sin_theta;
  double theta;
};

struct UniqueLine {
  NormalLine line;
  OrthogonalCase fit_case;
};

/// Isotropic statistics: every line through the centroid attains the same
/// mean squared distance (var_x + var_y) / 2.
struct AllLinesThroughCentroid {
  Point centroid;
  double objective = 0.0;
};

using OrthogonalFit = std::variant<UniqueLine, AllLinesThroughCentroid>;

using FittedLine = std::variant<SlopeInterceptLine, InverseSlopeLine, OrthogonalFit>;

struct FitReport {
  Method method = Method::kY;
  FittedLine line;
  double objective_min = 0.0;
  SummaryStats stats;
};

/// Relative tolerance used for var_x == var_y and cov == 0 decisions.
double isotropy_tolerance(const SummaryStats& s);

OrthogonalCase resolve_case(const SummaryStats& s);

/// Closed-form (cos, sin, theta) for a non-isotropic case.
AngleSolution trig_from_case(const OrthogonalCase& c);

FitReport fit_y(const PairedSample& p);
FitReport fit_x(const PairedSample& p);
OrthogonalFit fit_d(const PairedSample& p);

FitReport fit_y(const SummaryStats& s);
FitReport fit_x(const SummaryStats& s);
OrthogonalFit fit_d(const SummaryStats& s);

/// Minimum mean squared perpendicular distance for the given statistics.
double d_objective_min(const SummaryStats& s);

/// Runs one method and wraps the result.
FitReport fit(const PairedSample& p, Method method);

/// Normal form of a fitted line; absent for the isotropic D outcome.
std::optional<NormalLine> normal_form(const FittedLine& line);

double objective_y(const PairedSample& p, double slope, double intercept);
double objective_x(const PairedSample& p, double inverse_slope, double x_intercept);
double objective_d(const PairedSample& p, double theta, double offset);

}  // namespace linefit
