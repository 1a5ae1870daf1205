#include "linefit/fitters.hpp"

#include <cmath>
#include <string>

#include "linefit/error.hpp"
#include "linefit/overloaded.hpp"

namespace linefit {
namespace {

// A variance at or below this fraction of the raw second moment counts as
// exactly zero: the data sit on one vertical (or horizontal) line.
constexpr double kZeroVarianceScale = 1e-300;

void require_e_sign(const OrthogonalCase& c, bool nonnegative_allowed,
                    bool nonpositive_allowed, bool zero_allowed) {
  if (!c.e_ratio) {
    throw Error(ErrorKind::kInvalidArgument,
                std::string("case ") + std::string(to_string(c.tag)) +
                    " needs the E ratio");
  }
  const double e = *c.e_ratio;
  const bool ok = std::isfinite(e) && (e != 0.0 || zero_allowed) &&
                  ((e >= 0.0 && nonnegative_allowed) || (e <= 0.0 && nonpositive_allowed));
  if (!ok) {
    throw Error(ErrorKind::kInvalidArgument,
                "E ratio " + std::to_string(e) + " is inconsistent with case " +
                    std::string(to_string(c.tag)));
  }
}

}  // namespace

std::string_view to_string(Method method) {
  switch (method) {
    case Method::kY: return "Y";
    case Method::kX: return "X";
    case Method::kD: return "D";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view text) {
  if (text == "y" || text == "Y") return Method::kY;
  if (text == "x" || text == "X") return Method::kX;
  if (text == "d" || text == "D") return Method::kD;
  return std::nullopt;
}

std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::kI: return "I";
    case CaseTag::kII: return "II";
    case CaseTag::kIII: return "III";
    case CaseTag::kIV: return "IV";
    case CaseTag::kV: return "V";
    case CaseTag::kVI: return "VI";
    case CaseTag::kIsotropic: return "isotropic";
  }
  return "?";
}

double isotropy_tolerance(const SummaryStats& s) {
  return 1e-12 * (s.var_x + s.var_y);
}

OrthogonalCase resolve_case(const SummaryStats& s) {
  const double tol = isotropy_tolerance(s);
  const double diff = s.var_x - s.var_y;
  const bool zero_cov = std::abs(s.cov_xy) <= tol;
  const bool equal_var = std::abs(diff) <= tol;

  if (equal_var) {
    if (zero_cov) return {CaseTag::kIsotropic, std::nullopt};
    return {s.cov_xy > 0.0 ? CaseTag::kV : CaseTag::kVI, std::nullopt};
  }
  const double e = zero_cov ? 0.0 : 2.0 * s.cov_xy / diff;
  const bool cov_nonnegative = zero_cov || s.cov_xy > 0.0;
  if (diff > 0.0) return {cov_nonnegative ? CaseTag::kI : CaseTag::kII, e};
  return {cov_nonnegative ? CaseTag::kIII : CaseTag::kIV, e};
}

AngleSolution trig_from_case(const OrthogonalCase& c) {
  constexpr double kQuarterPi = kPi / 4.0;
  constexpr double kHalfPi = kPi / 2.0;

  switch (c.tag) {
    case CaseTag::kIsotropic:
      throw Error(ErrorKind::kDegenerateCase,
                  "isotropic statistics: every angle is optimal");
    case CaseTag::kV:
      return {M_SQRT1_2, M_SQRT1_2, kQuarterPi};
    case CaseTag::kVI:
      return {M_SQRT1_2, -M_SQRT1_2, -kQuarterPi};
    case CaseTag::kI:
      require_e_sign(c, true, false, true);
      break;
    case CaseTag::kII:
      require_e_sign(c, false, true, true);
      break;
    case CaseTag::kIII:
      require_e_sign(c, false, true, true);
      break;
    case CaseTag::kIV:
      require_e_sign(c, true, false, false);
      break;
  }

  // With q = sqrt(1 + E^2) the two closed-form magnitudes are
  //   sqrt((1 + E^2 + q) / (2 (1 + E^2))) = sqrt((q + 1) / (2 q))
  //   sqrt((1 + E^2 - q) / (2 (1 + E^2))) = |E| / sqrt(2 q (q + 1))
  // and the right-hand sides do not cancel for small |E|.
  const double e = *c.e_ratio;
  const double q = std::hypot(1.0, e);
  const double large = std::sqrt((q + 1.0) / (2.0 * q));
  const double small = std::abs(e) / std::sqrt(2.0 * q * (q + 1.0));
  const double half_arctan = 0.5 * std::atan(e);

  switch (c.tag) {
    case CaseTag::kI: return {large, small, half_arctan};
    case CaseTag::kII: return {large, -small, half_arctan};
    case CaseTag::kIII: return {small, large, half_arctan + kHalfPi};
    case CaseTag::kIV: return {small, -large, half_arctan - kHalfPi};
    default: break;
  }
  throw Error(ErrorKind::kInvalidArgument, "unreachable case tag");
}

FitReport fit_y(const SummaryStats& s) {
  if (s.var_x <= kZeroVarianceScale * s.mean_xx) {
    throw Error(ErrorKind::kVerticalData,
                "Y fit requires var(x) > 0; all points share x = " +
                    std::to_string(s.mean_x));
  }
  const double slope = s.cov_xy / s.var_x;
  FitReport report;
  report.method = Method::kY;
  report.line = SlopeInterceptLine{slope, s.mean_y - slope * s.mean_x};
  report.objective_min = std::max(0.0, s.cauchy_schwarz_gap()) / s.var_x;
  report.stats = s;
  return report;
}

FitReport fit_x(const SummaryStats& s) {
  if (s.var_y <= kZeroVarianceScale * s.mean_yy) {
    throw Error(ErrorKind::kHorizontalData,
                "X fit requires var(y) > 0; all points share y = " +
                    std::to_string(s.mean_y));
  }
  const double inverse_slope = s.cov_xy / s.var_y;
  FitReport report;
  report.method = Method::kX;
  report.line = InverseSlopeLine{inverse_slope, s.mean_x - inverse_slope * s.mean_y};
  report.objective_min = std::max(0.0, s.cauchy_schwarz_gap()) / s.var_y;
  report.stats = s;
  return report;
}

OrthogonalFit fit_d(const SummaryStats& s) {
  const OrthogonalCase c = resolve_case(s);
  if (c.tag == CaseTag::kIsotropic) {
    return AllLinesThroughCentroid{s.centroid(), 0.5 * (s.var_x + s.var_y)};
  }
  const AngleSolution a = trig_from_case(c);
  return UniqueLine{NormalLine(a.theta, s.mean_x * a.sin_theta - s.mean_y * a.cos_theta), c};
}

double d_objective_min(const SummaryStats& s) {
  if (resolve_case(s).tag == CaseTag::kIsotropic) return 0.5 * (s.var_x + s.var_y);
  // Smallest eigenvalue of the covariance matrix, as det / largest.
  const double largest =
      0.5 * (s.var_x + s.var_y) + 0.5 * std::hypot(s.var_x - s.var_y, 2.0 * s.cov_xy);
  return std::max(0.0, s.cauchy_schwarz_gap()) / largest;
}

FitReport fit_y(const PairedSample& p) { return fit_y(summarize(p)); }
FitReport fit_x(const PairedSample& p) { return fit_x(summarize(p)); }
OrthogonalFit fit_d(const PairedSample& p) { return fit_d(summarize(p)); }

FitReport fit(const PairedSample& p, Method method) {
  const SummaryStats s = summarize(p);
  switch (method) {
    case Method::kY: return fit_y(s);
    case Method::kX: return fit_x(s);
    case Method::kD: break;
  }
  FitReport report;
  report.method = Method::kD;
  report.line = fit_d(s);
  report.objective_min = d_objective_min(s);
  report.stats = s;
  return report;
}

std::optional<NormalLine> normal_form(const FittedLine& line) {
  return std::visit(
      Overloaded{
          [](const SlopeInterceptLine& l) -> std::optional<NormalLine> {
            return slope_to_normal(l);
          },
          [](const InverseSlopeLine& l) -> std::optional<NormalLine> {
            return inverse_to_normal(l);
          },
          [](const OrthogonalFit& f) -> std::optional<NormalLine> {
            if (const auto* u = std::get_if<UniqueLine>(&f)) return u->line;
            return std::nullopt;
          },
      },
      line);
}

double objective_y(const PairedSample& p, double slope, double intercept) {
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double r = slope * p.xs()[i] + intercept - p.ys()[i];
    acc += r * r;
  }
  return acc / static_cast<double>(p.size());
}

double objective_x(const PairedSample& p, double inverse_slope, double x_intercept) {
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double r = inverse_slope * p.ys()[i] + x_intercept - p.xs()[i];
    acc += r * r;
  }
  return acc / static_cast<double>(p.size());
}

double objective_d(const PairedSample& p, double theta, double offset) {
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double r = p.xs()[i] * s - p.ys()[i] * c - offset;
    acc += r * r;
  }
  return acc / static_cast<double>(p.size());
}

}  // namespace linefit
