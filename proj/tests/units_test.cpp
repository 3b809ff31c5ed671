#include <aeeopt/units.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

using namespace aee;

TEST(Units, DbToLinear) {
  EXPECT_DOUBLE_EQ(db_to_linear({0.0}), 1.0);
  EXPECT_NEAR(db_to_linear({-60.0}), 1.0e-6, 1.0e-6 * 1e-12);
  EXPECT_NEAR(db_to_linear({-70.0}), 1.0e-7, 1.0e-7 * 1e-12);
}

TEST(Units, DbmToWatts) {
  EXPECT_DOUBLE_EQ(dbm_to_watts({30.0}), 1.0);
  EXPECT_NEAR(dbm_to_watts({10.0}), 0.01, 0.01 * 1e-12);
  EXPECT_NEAR(dbm_to_watts({13.0}), 0.019953, 1e-6);
}

TEST(Units, WattsToDbm) {
  EXPECT_DOUBLE_EQ(watts_to_dbm(1.0).value, 30.0);
  EXPECT_NEAR(watts_to_dbm(0.01).value, 10.0, 1e-12);
  EXPECT_NEAR(watts_to_dbm(2.0e-5).value, -16.9897, 1e-4);
}

TEST(Units, DomainErrors) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  EXPECT_THROW(db_to_linear({nan}), std::domain_error);
  EXPECT_THROW(db_to_linear({inf}), std::domain_error);
  EXPECT_THROW(dbm_to_watts({nan}), std::domain_error);
  EXPECT_THROW(watts_to_dbm(0.0), std::domain_error);
  EXPECT_THROW(watts_to_dbm(-1.0), std::domain_error);
}

TEST(Units, RoundTripAndMonotone) {
  double prev_lin = 0.0, prev_w = 0.0;
  for (int i = 0; i <= 1300; ++i) {
    const double x = -200.0 + 0.2 * i;  // dBm in [-200, 60]
    const double w = dbm_to_watts({x});
    const double back = watts_to_dbm(w).value;
    EXPECT_LE(std::abs(back - x), 1e-12 * std::max(1.0, std::abs(x))) << x;
    EXPECT_GT(w, prev_w);
    const double lin = db_to_linear({x});
    EXPECT_GT(lin, prev_lin);
    prev_w = w;
    prev_lin = lin;
  }
}
