#include "linefit/diagnostics.hpp"

#include <cmath>

#include "linefit/error.hpp"

namespace linefit {
namespace {

constexpr double kOrderingSlack = 1e-12;

bool ordered(double lo, double mid, double hi) {
  return lo <= mid * (1.0 + kOrderingSlack) && mid <= hi * (1.0 + kOrderingSlack);
}

}  // namespace

std::string_view to_string(OrderingE status) {
  switch (status) {
    case OrderingE::kHolds: return "holds";
    case OrderingE::kEquality: return "equality";
    case OrderingE::kViolated: return "violated";
    case OrderingE::kNotApplicable: return "not_applicable";
  }
  return "?";
}

std::string_view to_string(OrderingF status) {
  switch (status) {
    case OrderingF::kHolds: return "holds";
    case OrderingF::kViolated: return "violated";
    case OrderingF::kConditionNotMet: return "condition_not_met";
    case OrderingF::kNotApplicable: return "not_applicable";
  }
  return "?";
}

double collinearity_tolerance(const SummaryStats& s) { return 1e-12 * s.var_x * s.var_y; }

ComparisonReport compare(const SummaryStats& s) {
  ComparisonReport r;
  r.cs_gap = s.cauchy_schwarz_gap();
  r.collinear = r.cs_gap <= collinearity_tolerance(s);

  try {
    r.slope_y = std::get<SlopeInterceptLine>(fit_y(s).line).slope;
    r.ratio_bound = std::sqrt(s.var_y / s.var_x);
  } catch (const Error&) {
    // vertical data: neither m nor the bound exists
  }
  if (std::abs(s.cov_xy) > isotropy_tolerance(s)) r.slope_x = s.var_y / s.cov_xy;

  const OrthogonalCase c = resolve_case(s);
  r.d_case = c.tag;
  if (c.tag == CaseTag::kIsotropic) {
    r.slope_d.kind = DSlope::Kind::kAllLines;
  } else {
    const AngleSolution a = trig_from_case(c);
    if (std::abs(a.cos_theta) <= kVerticalThreshold) {
      r.slope_d.kind = DSlope::Kind::kVertical;
    } else {
      r.slope_d.value = a.sin_theta / a.cos_theta;
    }
  }

  if (r.slope_y && r.slope_x) {
    const double m = std::abs(*r.slope_y);
    const double mx = std::abs(*r.slope_x);
    if (r.collinear) {
      r.ordering_e = OrderingE::kEquality;
    } else {
      r.ordering_e = ordered(m, *r.ratio_bound, mx) ? OrderingE::kHolds : OrderingE::kViolated;
    }

    if (r.slope_d.kind == DSlope::Kind::kValue) {
      const bool observed = ordered(m, std::abs(r.slope_d.value), mx);
      bool gated = true;
      if (c.tag == CaseTag::kIII || c.tag == CaseTag::kIV) {
        gated = 2.0 * s.cov_xy * s.cov_xy >= s.var_x * std::abs(s.var_x - s.var_y);
      }
      if (gated) {
        r.ordering_f = observed ? OrderingF::kHolds : OrderingF::kViolated;
      } else {
        r.ordering_f = OrderingF::kConditionNotMet;
        r.ordering_f_observed = observed;
      }
    }
  }
  return r;
}

ComparisonReport compare(const PairedSample& p) { return compare(summarize(p)); }

}  // namespace linefit
