#pragma once

#include "linefit/stats.hpp"

namespace linefit {

/// Brute-force minimizers used to check the closed-form fits. They evaluate
/// the objectives by direct residual summation and never call the fitters.
struct GridSpec {
  int coarse_steps = 2000;
  int refinement_rounds = 6;
  double shrink_factor = 0.05;
};

void validate(const GridSpec& g);

struct GridAngleResult {
  double theta;
  double offset;
  double objective;
  /// max - min of the objective over the coarse grid; ~0 for isotropic data.
  double coarse_spread;
};

struct GridLineResult {
  double slope;
  double intercept;
  double objective;
};

/// Searches theta over (-pi/2, pi/2]; the offset of each candidate passes
/// through the centroid.
GridAngleResult grid_min_d(const PairedSample& p, const GridSpec& g = {});

/// 2D search over (slope, intercept) minimizing mean squared vertical
/// residuals. The grid is laid out over (slope, height at mean x), which
/// decouples the two axes of the quadratic bowl.
GridLineResult grid_min_y(const PairedSample& p, const GridSpec& g = {});

/// grid_min_y on the coordinate-swapped sample: slope is the inverse slope
/// and intercept the x-intercept of x = slope*y + intercept.
GridLineResult grid_min_x(const PairedSample& p, const GridSpec& g = {});

}  // namespace linefit
