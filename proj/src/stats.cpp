#include "linefit/stats.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "linefit/error.hpp"

namespace linefit {
namespace {

bool is_constant(std::span<const double> v) {
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return *lo == *hi;
}

// Mean with one step of residual correction. Constant input returns the
// constant itself so that centered values are exactly zero.
double accurate_mean(std::span<const double> v) {
  if (is_constant(v)) return v.front();
  const double n = static_cast<double>(v.size());
  double sum = 0.0;
  for (double x : v) sum += x;
  const double first = sum / n;
  double correction = 0.0;
  for (double x : v) correction += x - first;
  return first + correction / n;
}

double centered_cross(std::span<const double> a, double mean_a,
                      std::span<const double> b, double mean_b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    acc += (a[i] - mean_a) * (b[i] - mean_b);
  }
  return acc / static_cast<double>(a.size());
}

}  // namespace

Sample::Sample(std::vector<double> values) : values_(std::move(values)) {
  if (values_.size() < 2) {
    throw Error(ErrorKind::kInvalidSample,
                "sample needs at least 2 values, got " +
                    std::to_string(values_.size()));
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw Error(ErrorKind::kInvalidSample,
                  "sample value at index " + std::to_string(i) +
                      " is not finite");
    }
  }
}

PairedSample::PairedSample(Sample xs, Sample ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
  if (xs_.size() != ys_.size()) {
    throw Error(ErrorKind::kLengthMismatch,
                "paired sample lengths differ: " + std::to_string(xs_.size()) +
                    " vs " + std::to_string(ys_.size()));
  }
}

PairedSample::PairedSample(std::vector<double> xs, std::vector<double> ys)
    : PairedSample(Sample(std::move(xs)), Sample(std::move(ys))) {}

PairedSample PairedSample::from_points(std::span<const Point> points) {
  std::vector<double> xs;
  std::vector<double> ys;
  xs.reserve(points.size());
  ys.reserve(points.size());
  for (const Point& p : points) {
    xs.push_back(p.x);
    ys.push_back(p.y);
  }
  return PairedSample(std::move(xs), std::move(ys));
}

std::vector<Point> PairedSample::points() const {
  std::vector<Point> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(point(i));
  return out;
}

double SummaryStats::cauchy_schwarz_gap() const {
  const double w = cov_xy * cov_xy;
  const double rounding = std::fma(-cov_xy, cov_xy, w);
  // Nonnegative by Cauchy-Schwarz; a negative result is rounding on
  // (near-)collinear data.
  return std::max(0.0, std::fma(var_x, var_y, -w) + rounding);
}

SummaryStats SummaryStats::swapped() const {
  SummaryStats s = *this;
  std::swap(s.mean_x, s.mean_y);
  std::swap(s.var_x, s.var_y);
  std::swap(s.mean_xx, s.mean_yy);
  return s;
}

double mean(const Sample& s) { return accurate_mean(s.values()); }

double variance(const Sample& s) {
  const auto v = s.values();
  if (is_constant(v)) return 0.0;
  const double m = accurate_mean(v);
  return std::max(0.0, centered_cross(v, m, v, m));
}

double covariance(const PairedSample& p) {
  const auto xs = p.xs().values();
  const auto ys = p.ys().values();
  return centered_cross(xs, accurate_mean(xs), ys, accurate_mean(ys));
}

SummaryStats summarize(const PairedSample& p) {
  const auto xs = p.xs().values();
  const auto ys = p.ys().values();
  const double n = static_cast<double>(p.size());

  double sum_xx = 0.0, sum_yy = 0.0, sum_xy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sum_xx += xs[i] * xs[i];
    sum_yy += ys[i] * ys[i];
    sum_xy += xs[i] * ys[i];
  }

  SummaryStats s;
  s.n = p.size();
  s.mean_x = accurate_mean(xs);
  s.mean_y = accurate_mean(ys);
  s.var_x = centered_cross(xs, s.mean_x, xs, s.mean_x);
  s.var_y = centered_cross(ys, s.mean_y, ys, s.mean_y);
  s.cov_xy = centered_cross(xs, s.mean_x, ys, s.mean_y);
  s.mean_xx = sum_xx / n;
  s.mean_yy = sum_yy / n;
  s.mean_xy = sum_xy / n;
  return s;
}

}  // namespace linefit
