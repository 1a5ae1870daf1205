#pragma once

#include <optional>
#include <string>
#include <variant>

#include "linefit/fitters.hpp"
#include "linefit/geometry.hpp"
#include "linefit/stats.hpp"

namespace linefit {

struct Translation {
  double u = 0.0;
  double v = 0.0;
};

/// Counter-clockwise rotation by `phi` radians. An unset center means "the
/// centroid of the sample being transformed"; see resolve_motion.
struct Rotation {
  double phi = 0.0;
  std::optional<Point> center;
};

using RigidMotion = std::variant<Translation, Rotation>;

/// Fills in an unset rotation center with the centroid of `p`.
RigidMotion resolve_motion(const RigidMotion& g, const PairedSample& p);

Point apply_motion(Point q, const RigidMotion& g);
PairedSample apply_motion_points(const PairedSample& p, const RigidMotion& g);

/// Image of a line under a rigid motion. Rotations must carry a center.
NormalLine transform_line(const NormalLine& line, const RigidMotion& g);

/// |sin(dtheta)| + |c1 -/+ c2|, with c2 re-signed when the two normals point
/// in opposite directions. Zero iff the two point sets coincide.
double line_discrepancy(const NormalLine& a, const NormalLine& b);

/// Outcome of one fit in a comparison: nothing (the method's precondition
/// failed or the line is not representable), a line, or the isotropic family.
using LineOutcome = std::variant<std::monostate, NormalLine, AllLinesThroughCentroid>;

enum class InvarianceStatus {
  kCompared,
  kOriginalFitMissing,
  kTransformedFitMissing,
  kExpectedNotRepresentable,
  kOutcomeMismatch,  // one side unique, the other the isotropic family
};

std::string_view to_string(InvarianceStatus status);

struct InvarianceReport {
  Method method = Method::kD;
  RigidMotion motion;
  LineOutcome line_from_transformed_data;
  LineOutcome expected_if_invariant;
  InvarianceStatus status = InvarianceStatus::kCompared;
  std::optional<double> discrepancy;
  std::string note;
};

/// Fits `method` on p and on g(p), pushes the first line through g, and
/// measures how far the two disagree. Fit failures are recorded, not thrown.
InvarianceReport invariance_report(const PairedSample& p, const RigidMotion& g,
                                   Method method);

}  // namespace linefit
