#include "linefit/transforms.hpp"

#include <cmath>

#include "linefit/error.hpp"
#include "linefit/overloaded.hpp"

namespace linefit {
namespace {

Point rotate_about(Point q, double phi, Point center) {
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  const double dx = q.x - center.x;
  const double dy = q.y - center.y;
  return {center.x + c * dx - s * dy, center.y + s * dx + c * dy};
}

const Point& require_center(const Rotation& r) {
  if (!r.center) {
    throw Error(ErrorKind::kInvalidArgument,
                "rotation center is unset; resolve it against a sample first");
  }
  return *r.center;
}

bool representable(Method method, const NormalLine& line) {
  switch (method) {
    case Method::kY: return std::abs(line.cos_theta()) > kVerticalThreshold;
    case Method::kX: return std::abs(line.sin_theta()) > kVerticalThreshold;
    case Method::kD: return true;
  }
  return true;
}

LineOutcome outcome_of(const FitReport& report) {
  if (const auto* d = std::get_if<OrthogonalFit>(&report.line)) {
    if (const auto* all = std::get_if<AllLinesThroughCentroid>(d)) return *all;
  }
  return *normal_form(report.line);
}

}  // namespace

RigidMotion resolve_motion(const RigidMotion& g, const PairedSample& p) {
  if (const auto* r = std::get_if<Rotation>(&g); r != nullptr && !r->center) {
    const SummaryStats s = summarize(p);
    return Rotation{r->phi, s.centroid()};
  }
  return g;
}

Point apply_motion(Point q, const RigidMotion& g) {
  return std::visit(
      Overloaded{
          [&](const Translation& t) { return Point{q.x + t.u, q.y + t.v}; },
          [&](const Rotation& r) { return rotate_about(q, r.phi, require_center(r)); },
      },
      g);
}

PairedSample apply_motion_points(const PairedSample& p, const RigidMotion& g) {
  const RigidMotion resolved = resolve_motion(g, p);
  std::vector<double> xs;
  std::vector<double> ys;
  xs.reserve(p.size());
  ys.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Point q = apply_motion(p.point(i), resolved);
    xs.push_back(q.x);
    ys.push_back(q.y);
  }
  return PairedSample(std::move(xs), std::move(ys));
}

NormalLine transform_line(const NormalLine& line, const RigidMotion& g) {
  return std::visit(
      Overloaded{
          [&](const Translation& t) {
            return NormalLine(line.theta(), line.offset() + t.u * line.sin_theta() -
                                                t.v * line.cos_theta());
          },
          [&](const Rotation& r) {
            const Point& center = require_center(r);
            // Move the center to the origin, rotate (offset is unchanged by a
            // rotation about the origin), move back.
            const double at_origin =
                line.offset() - center.x * line.sin_theta() + center.y * line.cos_theta();
            const double theta = line.theta() + r.phi;
            return NormalLine(theta, at_origin + center.x * std::sin(theta) -
                                         center.y * std::cos(theta));
          },
      },
      g);
}

double line_discrepancy(const NormalLine& a, const NormalLine& b) {
  const double dtheta = a.theta() - b.theta();
  const double b_offset = std::cos(dtheta) < 0.0 ? -b.offset() : b.offset();
  return std::abs(std::sin(dtheta)) + std::abs(a.offset() - b_offset);
}

std::string_view to_string(InvarianceStatus status) {
  switch (status) {
    case InvarianceStatus::kCompared: return "compared";
    case InvarianceStatus::kOriginalFitMissing: return "original_fit_missing";
    case InvarianceStatus::kTransformedFitMissing: return "transformed_fit_missing";
    case InvarianceStatus::kExpectedNotRepresentable: return "expected_not_representable";
    case InvarianceStatus::kOutcomeMismatch: return "outcome_mismatch";
  }
  return "?";
}

InvarianceReport invariance_report(const PairedSample& p, const RigidMotion& g,
                                   Method method) {
  InvarianceReport report;
  report.method = method;
  report.motion = resolve_motion(g, p);

  std::optional<FitReport> original;
  try {
    original = fit(p, method);
  } catch (const Error& e) {
    report.status = InvarianceStatus::kOriginalFitMissing;
    report.note = e.what();
    return report;
  }

  const LineOutcome before = outcome_of(*original);
  if (const auto* line = std::get_if<NormalLine>(&before)) {
    report.expected_if_invariant = transform_line(*line, report.motion);
  } else {
    const auto& all = std::get<AllLinesThroughCentroid>(before);
    report.expected_if_invariant =
        AllLinesThroughCentroid{apply_motion(all.centroid, report.motion), all.objective};
  }

  const PairedSample moved = apply_motion_points(p, report.motion);
  std::optional<FitReport> after;
  try {
    after = fit(moved, method);
  } catch (const Error& e) {
    report.note = e.what();
  }
  if (after) report.line_from_transformed_data = outcome_of(*after);

  if (const auto* expected = std::get_if<NormalLine>(&report.expected_if_invariant);
      expected != nullptr && !representable(method, *expected)) {
    report.status = InvarianceStatus::kExpectedNotRepresentable;
    report.note = "expected line cannot be written in the method's form";
    return report;
  }
  if (!after) {
    report.status = InvarianceStatus::kTransformedFitMissing;
    return report;
  }

  const auto* actual_line = std::get_if<NormalLine>(&report.line_from_transformed_data);
  const auto* expected_line = std::get_if<NormalLine>(&report.expected_if_invariant);
  const auto* actual_all =
      std::get_if<AllLinesThroughCentroid>(&report.line_from_transformed_data);
  const auto* expected_all =
      std::get_if<AllLinesThroughCentroid>(&report.expected_if_invariant);

  if (actual_line != nullptr && expected_line != nullptr) {
    report.discrepancy = line_discrepancy(*actual_line, *expected_line);
  } else if (actual_all != nullptr && expected_all != nullptr) {
    report.discrepancy =
        std::hypot(actual_all->centroid.x - expected_all->centroid.x,
                   actual_all->centroid.y - expected_all->centroid.y) +
        std::abs(actual_all->objective - expected_all->objective);
  } else {
    report.status = InvarianceStatus::kOutcomeMismatch;
    report.note = "one fit is a unique line, the other the isotropic family";
  }
  return report;
}

}  // namespace linefit
