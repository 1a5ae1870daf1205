#pragma once

#include <cmath>

namespace linefit {

inline constexpr double kPi = 3.14159265358979323846;

/// Below this |cos(theta)| a normal-form line is treated as vertical and has no
/// slope-intercept form (the slope would exceed ~1e9). Symmetrically for
/// |sin(theta)| and the inverse-slope form.
inline constexpr double kVerticalThreshold = 1e-9;

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// y = slope * x + intercept. Cannot represent vertical lines.
struct SlopeInterceptLine {
  double slope = 0.0;
  double intercept = 0.0;
};

/// x = inverse_slope * y + x_intercept. Cannot represent horizontal lines.
struct InverseSlopeLine {
  double inverse_slope = 0.0;
  double x_intercept = 0.0;
};

/// The line x*sin(theta) - y*cos(theta) = offset with theta in (-pi/2, pi/2].
///
/// Construction canonicalizes the angle: shifting theta by k*pi negates the
/// normal (sin, -cos) k times, so the offset is negated as well and the point
/// set is unchanged.
class NormalLine {
 public:
  NormalLine() = default;
  NormalLine(double theta, double offset);

  double theta() const noexcept { return theta_; }
  double offset() const noexcept { return offset_; }
  double sin_theta() const noexcept { return std::sin(theta_); }
  double cos_theta() const noexcept { return std::cos(theta_); }

  /// Signed residual x*sin(theta) - y*cos(theta) - offset. Its magnitude is
  /// the Euclidean distance of p from the line.
  double residual(Point p) const;

 private:
  double theta_ = 0.0;
  double offset_ = 0.0;
};

/// a*x + b*y = c, stored exactly as given.
class GeneralLine {
 public:
  GeneralLine(double a, double b, double c);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double c() const noexcept { return c_; }

 private:
  double a_;
  double b_;
  double c_;
};

/// Maps theta into (-pi/2, pi/2]; returns the number of half turns removed
/// through `half_turns` when non-null.
double canonical_angle(double theta, long* half_turns = nullptr);

double point_line_distance(Point p, const GeneralLine& line);

SlopeInterceptLine normal_to_slope(const NormalLine& line);
NormalLine slope_to_normal(const SlopeInterceptLine& line);

InverseSlopeLine normal_to_inverse(const NormalLine& line);
NormalLine inverse_to_normal(const InverseSlopeLine& line);

inline GeneralLine to_general(const NormalLine& line) {
  return GeneralLine(std::sin(line.theta()), -std::cos(line.theta()),
                     line.offset());
}

inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

}  // namespace linefit
