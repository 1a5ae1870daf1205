#include "linefit/generators.hpp"

#include <cmath>
#include <string>

#include "linefit/error.hpp"
#include "linefit/overloaded.hpp"
#include "linefit/transforms.hpp"

namespace linefit {
namespace {

void validate(const VerticalLadder& v) {
  if (!(v.half_width > 0.0) || !std::isfinite(v.half_width)) {
    throw Error(ErrorKind::kInvalidSpec, "vertical ladder needs half_width > 0");
  }
  if (!(variance(v.t) > 0.0)) {
    throw Error(ErrorKind::kInvalidSpec, "vertical ladder needs var(t) > 0");
  }
}

void validate(const SlantedLadder& s) {
  if (!std::isfinite(s.slope)) {
    throw Error(ErrorKind::kInvalidSpec, "slanted ladder slope must be finite");
  }
  if (!(s.offset > 0.0) || !std::isfinite(s.offset)) {
    throw Error(ErrorKind::kInvalidSpec, "slanted ladder needs offset > 0");
  }
}

void validate(const CircleSpec& c) {
  if (c.n < 3) {
    throw Error(ErrorKind::kInvalidSpec,
                "circle needs at least 3 points, got " + std::to_string(c.n));
  }
  if (!(c.phase >= 0.0 && c.phase < 2.0 * kPi)) {
    throw Error(ErrorKind::kInvalidSpec, "circle phase must lie in [0, 2*pi)");
  }
  if (!(c.radius > 0.0) || !std::isfinite(c.radius) || !is_finite(c.center)) {
    throw Error(ErrorKind::kInvalidSpec, "circle needs a finite radius > 0 and center");
  }
}

struct MomentsOfT {
  double mean;
  double mean_sq;
  double var;
};

MomentsOfT moments(const Sample& t) {
  double sum_sq = 0.0;
  for (double v : t.values()) sum_sq += v * v;
  return {mean(t), sum_sq / static_cast<double>(t.size()), variance(t)};
}

}  // namespace

PairedSample gen_parallel(const ParallelSpec& spec) {
  std::vector<double> xs;
  std::vector<double> ys;
  std::visit(Overloaded{
                 [&](const VerticalLadder& v) {
                   validate(v);
                   for (double t : v.t.values()) {
                     xs.push_back(v.half_width);
                     ys.push_back(t);
                     xs.push_back(-v.half_width);
                     ys.push_back(t);
                   }
                 },
                 [&](const SlantedLadder& s) {
                   validate(s);
                   const double m = s.slope;
                   const double b = s.offset;
                   const double k = m * m + 1.0;
                   for (double t : s.t.values()) {
                     xs.push_back(t);
                     ys.push_back(m * t + b);
                     xs.push_back(t + 2.0 * m * b / k);
                     ys.push_back(m * t + (m * m - 1.0) * b / k);
                   }
                 },
             },
             spec);
  return PairedSample(std::move(xs), std::move(ys));
}

PairedSample gen_circle(const CircleSpec& spec) {
  validate(spec);
  std::vector<double> xs;
  std::vector<double> ys;
  xs.reserve(spec.n);
  ys.reserve(spec.n);
  for (int i = 1; i <= spec.n; ++i) {
    const double angle = spec.phase + 2.0 * kPi * i / spec.n;
    xs.push_back(spec.radius * std::cos(angle));
    ys.push_back(spec.radius * std::sin(angle));
  }
  PairedSample unit(std::move(xs), std::move(ys));
  if (spec.center.x == 0.0 && spec.center.y == 0.0) return unit;
  return apply_motion_points(unit, Translation{spec.center.x, spec.center.y});
}

PairedSample gen_noisy_line(const NoisyLineSpec& spec) {
  if (spec.n < 2) {
    throw Error(ErrorKind::kInvalidSpec, "noisy line needs n >= 2");
  }
  if (!(spec.x_max > spec.x_min) || !(spec.noise >= 0.0) || !std::isfinite(spec.slope) ||
      !std::isfinite(spec.intercept) || !std::isfinite(spec.noise)) {
    throw Error(ErrorKind::kInvalidSpec,
                "noisy line needs x_max > x_min, noise >= 0 and finite parameters");
  }
  UniformStream stream(spec.seed);
  std::vector<double> xs;
  std::vector<double> ys;
  xs.reserve(spec.n);
  ys.reserve(spec.n);
  for (int i = 0; i < spec.n; ++i) {
    const double x = stream.next(spec.x_min, spec.x_max);
    const double perturbation = spec.noise == 0.0 ? 0.0 : stream.next(-spec.noise, spec.noise);
    xs.push_back(x);
    ys.push_back(spec.slope * x + spec.intercept + perturbation);
  }
  return PairedSample(std::move(xs), std::move(ys));
}

NormalLine ladder_midline(const ParallelSpec& spec) {
  return std::visit(Overloaded{
                        [](const VerticalLadder&) { return NormalLine(kPi / 2.0, 0.0); },
                        [](const SlantedLadder& s) {
                          return slope_to_normal(SlopeInterceptLine{s.slope, 0.0});
                        },
                    },
                    spec);
}

LadderRegime ladder_regime(const ParallelSpec& spec) {
  double along = 0.0;
  double across = 0.0;
  std::visit(Overloaded{
                 [&](const VerticalLadder& v) {
                   along = variance(v.t);
                   across = v.half_width * v.half_width;
                 },
                 [&](const SlantedLadder& s) {
                   const double k = 1.0 + s.slope * s.slope;
                   along = k * variance(s.t);
                   across = s.offset * s.offset / k;
                 },
             },
             spec);
  if (along > across) return LadderRegime::kAlongLines;
  if (along < across) return LadderRegime::kAcrossLines;
  return LadderRegime::kTransition;
}

SummaryStats expected_stats(const ParallelSpec& spec) {
  SummaryStats s;
  std::visit(
      Overloaded{
          [&](const VerticalLadder& v) {
            const MomentsOfT t = moments(v.t);
            const double a = v.half_width;
            s.n = 2 * v.t.size();
            s.mean_x = 0.0;
            s.mean_xx = a * a;
            s.var_x = a * a;
            s.mean_y = t.mean;
            s.mean_yy = t.mean_sq;
            s.var_y = t.var;
            s.mean_xy = 0.0;
            s.cov_xy = 0.0;
          },
          [&](const SlantedLadder& sl) {
            const MomentsOfT t = moments(sl.t);
            const double m = sl.slope;
            const double b = sl.offset;
            const double k = m * m + 1.0;
            s.n = 2 * sl.t.size();
            s.mean_x = t.mean + m * b / k;
            s.mean_xx = t.mean_sq + 2.0 * m * b * t.mean / k + 2.0 * m * m * b * b / (k * k);
            s.var_x = t.var + m * m * b * b / (k * k);
            s.mean_y = m * t.mean + m * m * b / k;
            s.mean_yy = m * m * t.mean_sq + 2.0 * m * m * m * b * t.mean / k +
                        (m * m * m * m + 1.0) * b * b / (k * k);
            s.var_y = m * m * t.var + b * b / (k * k);
            s.mean_xy = m * t.mean_sq + 2.0 * m * m * b * t.mean / k +
                        m * (m * m - 1.0) * b * b / (k * k);
            s.cov_xy = m * t.var - m * b * b / (k * k);
          },
      },
      spec);
  return s;
}

// Both closed forms are 0/0 when the angle is a multiple of 2*pi, where every
// term is sin(0) = 0 or cos(0) = 1.
double sine_sum(int n, double angle) {
  if (std::sin(angle / 2.0) == 0.0) return 0.0;
  return std::sin((n + 1) * angle / 2.0) * std::sin(n * angle / 2.0) / std::sin(angle / 2.0);
}

double cosine_sum(int n, double angle) {
  if (std::sin(angle / 2.0) == 0.0) return static_cast<double>(n);
  return std::sin((n + 0.5) * angle) / (2.0 * std::sin(angle / 2.0)) - 0.5;
}

SummaryStats expected_stats(const CircleSpec& spec) {
  validate(spec);
  const int n = spec.n;
  const double nn = static_cast<double>(n);
  const double step = 2.0 * kPi / nn;
  const double a = spec.phase;

  // cos(a + i*step) and sin(a + i*step) expanded with the addition formulas.
  const double c1 = cosine_sum(n, step);
  const double s1 = sine_sum(n, step);
  const double c2 = cosine_sum(n, 2.0 * step);
  const double s2 = sine_sum(n, 2.0 * step);
  const double sum_x = std::cos(a) * c1 - std::sin(a) * s1;
  const double sum_y = std::sin(a) * c1 + std::cos(a) * s1;
  const double sum_xx = nn / 2.0 + 0.5 * (std::cos(2.0 * a) * c2 - std::sin(2.0 * a) * s2);
  const double sum_yy = nn / 2.0 - 0.5 * (std::cos(2.0 * a) * c2 - std::sin(2.0 * a) * s2);
  const double sum_xy = 0.5 * (std::sin(2.0 * a) * c2 + std::cos(2.0 * a) * s2);

  const double ux = sum_x / nn;
  const double uy = sum_y / nn;
  const double r = spec.radius;
  const double r2 = r * r;

  SummaryStats s;
  s.n = static_cast<std::size_t>(n);
  s.var_x = r2 * (sum_xx / nn - ux * ux);
  s.var_y = r2 * (sum_yy / nn - uy * uy);
  s.cov_xy = r2 * (sum_xy / nn - ux * uy);
  s.mean_x = spec.center.x + r * ux;
  s.mean_y = spec.center.y + r * uy;
  s.mean_xx = s.var_x + s.mean_x * s.mean_x;
  s.mean_yy = s.var_y + s.mean_y * s.mean_y;
  s.mean_xy = s.cov_xy + s.mean_x * s.mean_y;
  return s;
}

Sample random_ladder_parameters(int count, double half_range, std::uint64_t seed) {
  if (count < 2 || !(half_range > 0.0)) {
    throw Error(ErrorKind::kInvalidSpec, "ladder needs count >= 2 and half_range > 0");
  }
  UniformStream stream(seed);
  std::vector<double> t;
  t.reserve(count);
  for (int i = 0; i < count; ++i) t.push_back(stream.next(-half_range, half_range));
  return Sample(std::move(t));
}

}  // namespace linefit
