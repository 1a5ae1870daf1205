#include "linefit/geometry.hpp"

#include <string>

#include "linefit/error.hpp"

namespace linefit {

double canonical_angle(double theta, long* half_turns) {
  constexpr double kHalfPi = kPi / 2.0;
  long k = static_cast<long>(std::ceil((theta - kHalfPi) / kPi));
  double t = theta - static_cast<double>(k) * kPi;
  if (t > kHalfPi) {
    t -= kPi;
    ++k;
  } else if (t <= -kHalfPi) {
    t += kPi;
    --k;
  }
  if (half_turns != nullptr) *half_turns = k;
  return t;
}

NormalLine::NormalLine(double theta, double offset) {
  if (!std::isfinite(theta) || !std::isfinite(offset)) {
    throw Error(ErrorKind::kInvalidLine, "normal-form line has non-finite parameters");
  }
  long k = 0;
  theta_ = canonical_angle(theta, &k);
  offset_ = (k % 2 == 0) ? offset : -offset;
}

double NormalLine::residual(Point p) const {
  return p.x * std::sin(theta_) - p.y * std::cos(theta_) - offset_;
}

GeneralLine::GeneralLine(double a, double b, double c) : a_(a), b_(b), c_(c) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c)) {
    throw Error(ErrorKind::kInvalidLine, "line coefficients must be finite");
  }
  if (a == 0.0 && b == 0.0) {
    throw Error(ErrorKind::kInvalidLine, "line a*x + b*y = c needs (a, b) != (0, 0)");
  }
}

double point_line_distance(Point p, const GeneralLine& line) {
  return std::abs(line.a() * p.x + line.b() * p.y - line.c()) /
         std::hypot(line.a(), line.b());
}

SlopeInterceptLine normal_to_slope(const NormalLine& line) {
  const double c = line.cos_theta();
  if (std::abs(c) <= kVerticalThreshold) {
    throw Error(ErrorKind::kNotRepresentable,
                "vertical line (theta = " + std::to_string(line.theta()) +
                    ") has no slope-intercept form");
  }
  return {line.sin_theta() / c, -line.offset() / c};
}

NormalLine slope_to_normal(const SlopeInterceptLine& line) {
  const double theta = std::atan(line.slope);
  return NormalLine(theta, -line.intercept * std::cos(theta));
}

InverseSlopeLine normal_to_inverse(const NormalLine& line) {
  const double s = line.sin_theta();
  if (std::abs(s) <= kVerticalThreshold) {
    throw Error(ErrorKind::kNotRepresentable,
                "horizontal line (theta = " + std::to_string(line.theta()) +
                    ") has no inverse-slope form");
  }
  return {line.cos_theta() / s, line.offset() / s};
}

NormalLine inverse_to_normal(const InverseSlopeLine& line) {
  // The direction (inverse_slope, 1) is orthogonal to (sin, -cos).
  const double theta = canonical_angle(std::atan2(1.0, line.inverse_slope));
  return NormalLine(theta, line.x_intercept * std::sin(theta));
}

}  // namespace linefit
