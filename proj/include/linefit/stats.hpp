#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "linefit/geometry.hpp"

namespace linefit {

/// A finite coordinate vector with at least two entries. Validation happens
/// once, at construction.
class Sample {
 public:
  explicit Sample(std::vector<double> values);

  std::size_t size() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }

 private:
  std::vector<double> values_;
};

/// The fitting input: n points (xs[i], ys[i]).
class PairedSample {
 public:
  PairedSample(Sample xs, Sample ys);
  PairedSample(std::vector<double> xs, std::vector<double> ys);

  static PairedSample from_points(std::span<const Point> points);

  std::size_t size() const noexcept { return xs_.size(); }
  const Sample& xs() const noexcept { return xs_; }
  const Sample& ys() const noexcept { return ys_; }
  Point point(std::size_t i) const { return {xs_[i], ys_[i]}; }
  std::vector<Point> points() const;

  /// The same points with coordinates exchanged, (x, y) -> (y, x).
  PairedSample swapped() const { return PairedSample(ys_, xs_); }

 private:
  Sample xs_;
  Sample ys_;
};

struct SummaryStats {
  std::size_t n = 0;
  double mean_x = 0.0;
  double mean_y = 0.0;
  double var_x = 0.0;
  double var_y = 0.0;
  double cov_xy = 0.0;
  double mean_xx = 0.0;
  double mean_yy = 0.0;
  double mean_xy = 0.0;

  Point centroid() const { return {mean_x, mean_y}; }

  /// var_x * var_y - cov_xy^2, evaluated with a fused difference of products.
  /// Never negative in exact arithmetic; zero iff the points are collinear.
  double cauchy_schwarz_gap() const;

  /// Statistics of the coordinate-swapped sample.
  SummaryStats swapped() const;
};

double mean(const Sample& s);
double variance(const Sample& s);
double covariance(const PairedSample& p);
SummaryStats summarize(const PairedSample& p);

}  // namespace linefit
