#include "linefit/oracle.hpp"

#include <gtest/gtest.h>

#include "linefit/error.hpp"
#include "linefit/fitters.hpp"
#include "linefit/generators.hpp"
#include "test_support.hpp"

namespace linefit {
namespace {

const PairedSample kThree({0, 1, 2}, {0, 0, 1});

TEST(GridMinD, ThreePoints) {
  const GridAngleResult r = grid_min_d(kThree);
  EXPECT_NEAR(r.theta, 0.5 * std::atan(1.5), 1e-5);
  EXPECT_NEAR(std::tan(r.theta), 0.53518, 1e-5);
  EXPECT_NEAR(r.offset, std::sin(r.theta) - std::cos(r.theta) / 3.0, 1e-15);
  EXPECT_NEAR(r.objective, objective_d(kThree, r.theta, r.offset), 1e-15);
}

TEST(GridMinD, CircleIsFlat) {
  const GridAngleResult r = grid_min_d(gen_circle(CircleSpec{8, 0.0, 1.0, {}}));
  EXPECT_LT(r.coarse_spread, 1e-12);
  EXPECT_NEAR(r.objective, 0.5, 1e-12);
}

TEST(GridMinD, Collinear) {
  const GridAngleResult r = grid_min_d(PairedSample({-1, 0, 1, 3}, {-2, 0, 2, 6}));
  EXPECT_LT(r.objective, 1e-20);
  EXPECT_NEAR(std::tan(r.theta), 2.0, 1e-8);
}

TEST(GridMinD, VerticalOptimumAtUpperEnd) {
  const GridAngleResult r = grid_min_d(PairedSample({1, 1, 1}, {0, 2, 3}));
  EXPECT_NEAR(std::abs(std::sin(r.theta)), 1.0, 1e-12);
  EXPECT_LT(r.objective, 1e-18);
}

TEST(GridMinY, Examples) {
  const GridLineResult r = grid_min_y(kThree);
  EXPECT_NEAR(r.slope, 0.5, 1e-4);
  EXPECT_NEAR(r.intercept, -1.0 / 6.0, 1e-4);
  EXPECT_NEAR(r.objective, 1.0 / 18.0, 1e-10);

  const GridLineResult flat = grid_min_y(PairedSample({-2, 0, 5}, {3, 3, 3}));
  EXPECT_NEAR(flat.slope, 0.0, 1e-8);
  EXPECT_NEAR(flat.intercept, 3.0, 1e-8);

  EXPECT_THROW(grid_min_y(PairedSample({2, 2}, {0, 1})), Error);
}

TEST(GridMinY, RandomSampleMatchesFit) {
  UniformStream rng(71);
  const PairedSample p = testing::random_cloud(rng, 15);
  const GridLineResult r = grid_min_y(p);
  const auto line = std::get<SlopeInterceptLine>(fit_y(p).line);
  EXPECT_NEAR(r.slope, line.slope, 1e-4);
  EXPECT_NEAR(r.intercept, line.intercept, 1e-4);
}

TEST(GridMinX, ThreePoints) {
  const GridLineResult r = grid_min_x(kThree);
  EXPECT_NEAR(r.slope, 1.5, 1e-4);
  EXPECT_NEAR(r.intercept, 0.5, 1e-4);
}

TEST(GridSpec, Validation) {
  EXPECT_NO_THROW(validate(GridSpec{}));
  EXPECT_THROW(validate(GridSpec{99, 6, 0.05}), Error);
  EXPECT_THROW(validate(GridSpec{2000, 2, 0.05}), Error);
  EXPECT_THROW(validate(GridSpec{2000, 6, 0.0}), Error);
  EXPECT_THROW(validate(GridSpec{2000, 6, 1.0}), Error);
  EXPECT_THROW(grid_min_d(kThree, GridSpec{10, 6, 0.05}), Error);
}

TEST(GridSpec, FinerGridsDoNoWorse) {
  UniformStream rng(72);
  const PairedSample p = testing::random_cloud(rng, 20);
  const GridAngleResult coarse = grid_min_d(p, GridSpec{100, 3, 0.5});
  const GridAngleResult fine = grid_min_d(p);
  EXPECT_LE(fine.objective, coarse.objective + 1e-15);
}

TEST(OracleProperty, ClosedFormIsLowerBound) {
  UniformStream rng(73);
  for (int trial = 0; trial < 50; ++trial) {
    const PairedSample p = testing::random_cloud(rng, 3 + static_cast<int>(rng.next_index(30)));
    const double tol = 1e-12 * (1 + summarize(p).var_x + summarize(p).var_y);
    EXPECT_GE(grid_min_d(p).objective, fit(p, Method::kD).objective_min - tol);
    EXPECT_GE(grid_min_y(p).objective, fit(p, Method::kY).objective_min - tol);
    EXPECT_GE(grid_min_x(p).objective, fit(p, Method::kX).objective_min - tol);
  }
}

TEST(OracleProperty, Deterministic) {
  UniformStream rng(74);
  const PairedSample p = testing::random_cloud(rng, 12);
  const GridAngleResult a = grid_min_d(p), b = grid_min_d(p);
  EXPECT_EQ(a.theta, b.theta);
  EXPECT_EQ(a.objective, b.objective);
  EXPECT_EQ(grid_min_y(p).slope, grid_min_y(p).slope);
}

}  // namespace
}  // namespace linefit
