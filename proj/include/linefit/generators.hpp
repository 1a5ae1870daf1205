#pragma once

#include <cstdint>
#include <random>
#include <variant>

#include "linefit/geometry.hpp"
#include "linefit/stats.hpp"

namespace linefit {

/// Seeded uniform stream on [0, 1). Maps raw 64-bit draws to doubles itself
/// so sequences do not depend on the standard library's distributions.
class UniformStream {
 public:
  explicit UniformStream(std::uint64_t seed) : engine_(seed) {}

  double next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double next(double lo, double hi) { return lo + (hi - lo) * next(); }
  std::uint64_t next_index(std::uint64_t bound) { return engine_() % bound; }

 private:
  std::mt19937_64 engine_;
};

/// Points (+half_width, t_i) and (-half_width, t_i).
struct VerticalLadder {
  double half_width;
  Sample t;
};

/// Points (t_i, slope*t_i + offset) on y = slope*x + offset, each paired with
/// its mirror image across y = slope*x, which lies on y = slope*x - offset.
struct SlantedLadder {
  double slope;
  double offset;
  Sample t;
};

using ParallelSpec = std::variant<VerticalLadder, SlantedLadder>;

/// n points at angles phase + 2*pi*i/n, i = 1..n.
struct CircleSpec {
  int n = 3;
  double phase = 0.0;
  double radius = 1.0;
  Point center{};
};

struct NoisyLineSpec {
  double slope = 1.0;
  double intercept = 0.0;
  int n = 10;
  double x_min = -1.0;
  double x_max = 1.0;
  /// Each y is perturbed by a uniform draw from [-noise, noise].
  double noise = 0.0;
  std::uint64_t seed = 0;
};

/// Which way the perpendicular-offset fit of a ladder goes.
///
/// kAlongLines: the fit is the midline between the two data lines.
/// kAcrossLines: the fit is perpendicular to the data lines, through the
///   centroid (the two rungs look like two clusters).
/// kTransition: spread along and across the lines is equal; every line
///   through the centroid is optimal.
///
/// For a slanted ladder the spread along the lines is (1 + slope^2) var(t)
/// (t is the x coordinate, not arc length) and the spread across them is
/// offset^2 / (1 + slope^2), so the threshold is
/// offset^2 = (1 + slope^2)^2 var(t).
enum class LadderRegime { kAlongLines, kAcrossLines, kTransition };

PairedSample gen_parallel(const ParallelSpec& spec);
PairedSample gen_circle(const CircleSpec& spec);
PairedSample gen_noisy_line(const NoisyLineSpec& spec);

/// The line midway between the two data lines.
NormalLine ladder_midline(const ParallelSpec& spec);
LadderRegime ladder_regime(const ParallelSpec& spec);

/// Means, variances and covariance from the closed forms in terms of the
/// statistics of t (ladders) or from trigonometric sum formulas (circles).
SummaryStats expected_stats(const ParallelSpec& spec);
SummaryStats expected_stats(const CircleSpec& spec);

/// Sum_{i=1..n} sin(i*angle) and Sum_{i=1..n} cos(i*angle), closed forms.
double sine_sum(int n, double angle);
double cosine_sum(int n, double angle);

/// t values uniformly drawn from [-half_range, half_range].
Sample random_ladder_parameters(int count, double half_range, std::uint64_t seed);

}  // namespace linefit
