#include "linefit/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "linefit/error.hpp"
#include "linefit/fitters.hpp"
#include "linefit/geometry.hpp"

namespace linefit {
namespace {

double offset_through_centroid(double theta, double mean_x, double mean_y) {
  return mean_x * std::sin(theta) - mean_y * std::cos(theta);
}

double plain_mean(std::span<const double> v) {
  double sum = 0.0;
  for (double x : v) sum += x;
  return sum / static_cast<double>(v.size());
}

// Per-axis grid size for the 2D searches.
int plane_steps(const GridSpec& g) { return g.coarse_steps / 20 + 1; }

}  // namespace

void validate(const GridSpec& g) {
  if (g.coarse_steps < 100 || g.refinement_rounds < 3 || !(g.shrink_factor > 0.0) ||
      !(g.shrink_factor < 1.0)) {
    throw Error(ErrorKind::kInvalidSpec,
                "grid needs coarse_steps >= 100, refinement_rounds >= 3 and "
                "shrink_factor in (0, 1)");
  }
}

GridAngleResult grid_min_d(const PairedSample& p, const GridSpec& g) {
  validate(g);
  const double mean_x = plain_mean(p.xs().values());
  const double mean_y = plain_mean(p.ys().values());
  auto objective = [&](double theta) {
    return objective_d(p, theta, offset_through_centroid(theta, mean_x, mean_y));
  };

  double best_theta = 0.0;
  double best = std::numeric_limits<double>::infinity();
  double worst = -std::numeric_limits<double>::infinity();
  const double coarse_step = kPi / g.coarse_steps;
  for (int k = 1; k <= g.coarse_steps; ++k) {
    const double theta = -kPi / 2.0 + k * coarse_step;
    const double value = objective(theta);
    worst = std::max(worst, value);
    if (value < best) {
      best = value;
      best_theta = theta;
    }
  }
  const double spread = worst - best;

  // Each round keeps the incumbent at the center of a bracket shrink_factor
  // times the previous width; the bracket always spans several old steps.
  double half_width = 0.5 * kPi * g.shrink_factor;
  for (int round = 0; round < g.refinement_rounds; ++round) {
    const double lo = best_theta - half_width;
    const double step = 2.0 * half_width / g.coarse_steps;
    for (int k = 0; k <= g.coarse_steps; ++k) {
      const double theta = lo + k * step;
      const double value = objective(theta);
      if (value < best) {
        best = value;
        best_theta = theta;
      }
    }
    half_width *= g.shrink_factor;
  }

  const double theta = canonical_angle(best_theta);
  return {theta, offset_through_centroid(theta, mean_x, mean_y), best, spread};
}

GridLineResult grid_min_y(const PairedSample& p, const GridSpec& g) {
  validate(g);
  const auto xs = p.xs().values();
  const auto ys = p.ys().values();
  const auto [x_lo, x_hi] = std::minmax_element(xs.begin(), xs.end());
  const auto [y_lo, y_hi] = std::minmax_element(ys.begin(), ys.end());
  const double x_range = *x_hi - *x_lo;
  const double y_range = *y_hi - *y_lo;
  if (x_range == 0.0) {
    throw Error(ErrorKind::kVerticalData, "grid_min_y: all points share one x");
  }

  // |optimal slope| <= sd(y)/sd(x) <= (y_range/2) * sqrt(2n) / x_range.
  const double widen = std::max(10.0, std::sqrt(static_cast<double>(p.size()) / 2.0));
  const double slope_bound = widen * y_range / x_range + 10.0;
  const double x_ref = plain_mean(xs);
  const double height_half = y_range > 0.0 ? 0.5 * y_range : 1.0;

  // Parametrize the line as y = slope * (x - x_ref) + height.
  auto objective = [&](double slope, double height) {
    return objective_y(p, slope, height - slope * x_ref);
  };

  const int steps = plane_steps(g);
  double slope_center = 0.0;
  double slope_half = slope_bound;
  double height_center = 0.5 * (*y_lo + *y_hi);
  double height_half_width = height_half * 1.1;
  double best_slope = slope_center;
  double best_height = height_center;
  double best = objective(best_slope, best_height);

  for (int round = 0; round <= g.refinement_rounds; ++round) {
    const double slope_lo = slope_center - slope_half;
    const double height_lo = height_center - height_half_width;
    const double slope_step = 2.0 * slope_half / (steps - 1);
    const double height_step = 2.0 * height_half_width / (steps - 1);
    for (int i = 0; i < steps; ++i) {
      const double slope = slope_lo + i * slope_step;
      for (int j = 0; j < steps; ++j) {
        const double height = height_lo + j * height_step;
        const double value = objective(slope, height);
        if (value < best) {
          best = value;
          best_slope = slope;
          best_height = height;
        }
      }
    }
    slope_center = best_slope;
    height_center = best_height;
    slope_half *= g.shrink_factor;
    height_half_width *= g.shrink_factor;
  }

  return {best_slope, best_height - best_slope * x_ref, best};
}

GridLineResult grid_min_x(const PairedSample& p, const GridSpec& g) {
  return grid_min_y(p.swapped(), g);
}

}  // namespace linefit
