#include <aeeopt/golden_section.hpp>

#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"

using namespace aee;

TEST(GoldenSection, Parabola) {
  const auto r = golden_section_maximize(
      [](double x) { return -(x - 2.0) * (x - 2.0); }, 0.0, 5.0, 1e-9, 200);
  EXPECT_NEAR(r.x, 2.0, 1e-9);
  EXPECT_NEAR(r.fx, 0.0, 1e-17);
}

TEST(GoldenSection, AsymmetricUnimodal) {
  // x * e^-x peaks at x = 1; localization is limited by the roundoff
  // plateau sqrt(2 eps_machine f / |f''|) ~ 1.4e-8, not by the bracket
  const auto r = golden_section_maximize(
      [](double x) { return x * std::exp(-x); }, 0.0, 10.0, 1e-10, 200);
  EXPECT_NEAR(r.x, 1.0, 5e-8);
  EXPECT_NEAR(r.fx, std::exp(-1.0), 1e-15);
}

TEST(GoldenSection, BoundaryMaximum) {
  const auto r = golden_section_maximize([](double x) { return x; }, 0.0,
                                         3.0, 1e-9, 200);
  EXPECT_NEAR(r.x, 3.0, 1e-8);
}

TEST(GoldenSection, IterationBound) {
  for (double width : {1e-3, 1.0, 50.0}) {
    for (double eps : {1e-6, 1e-9, 1e-12}) {
      const auto r = golden_section_maximize(
          [](double x) { return -x * x + 0.3 * x; }, 0.0, width, eps, 10000);
      EXPECT_LE(r.iterations, test::gs_iteration_bound(width, eps) + 2)
          << "width=" << width << " eps=" << eps;
    }
  }
}

TEST(GoldenSection, RespectsIterationCap) {
  const auto r = golden_section_maximize(
      [](double x) { return -(x - 1.0) * (x - 1.0); }, 0.0, 100.0, 1e-15, 7);
  EXPECT_EQ(r.iterations, 7);
}

TEST(GoldenSection, DegenerateInterval) {
  const auto r = golden_section_maximize([](double x) { return -x * x; },
                                         0.5, 0.5 + 1e-12, 1e-9, 200);
  EXPECT_EQ(r.iterations, 0);
  EXPECT_NEAR(r.x, 0.5, 1e-11);
}
