#include "conicqed/errors.hpp"
#include "conicqed/specfun.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>

using namespace conicqed;

TEST(BesselJ, ExactValuesAtOrigin) {
  EXPECT_EQ(bessel_j(0.0, 0.0), 1.0);
  EXPECT_EQ(bessel_j(1.0, 0.0), 0.0);
  EXPECT_EQ(bessel_j(2.5, 0.0), 0.0);
  EXPECT_EQ(bessel_j(1e-3, 0.0), 0.0);
}

TEST(BesselJ, HalfIntegerClosedForm) {
  EXPECT_NEAR(bessel_j(0.5, std::numbers::pi), 0.0, 1e-15);
  for (double x : {0.3, 1.0, 4.0, 13.0, 27.5}) {
    const double exact = std::sqrt(2.0 / (std::numbers::pi * x)) * std::sin(x);
    EXPECT_NEAR(bessel_j(0.5, x), exact, 1e-14) << x;
  }
}

TEST(BesselJ, NegativeIntegerReflection) {
  EXPECT_EQ(bessel_j(-1.0, 2.0), -bessel_j(1.0, 2.0));
  for (int n = 0; n <= 12; ++n) {
    for (double x : {0.0, 0.1, 1.7, 8.0, 15.0, 33.3}) {
      const double sign = n % 2 == 0 ? 1.0 : -1.0;
      EXPECT_EQ(bessel_j(-n, x), sign * bessel_j(n, x)) << n << " " << x;
    }
  }
}

// Reference values from mpmath.besselj at 30 digits.
TEST(BesselJ, MatchesHighPrecisionReference) {
  struct Case {
    double nu, x, ref;
  };
  const Case cases[] = {
      {4.5, 7.3, 0.21923878709866570311},   {2.4, 11.7, 0.10754067765748068106},
      {50.0, 50.0, 0.12140902189761506382}, {30.3, 45.1, 0.06810350132619292738},
      {0.2, 1e-3, 0.2381614175411533975},   {12.7, 3.1, 7.6556682234395468462e-8},
      {1.5, 2.0, 0.49129377868716234501},   {0.7, 25.0, -0.068280288066609978148},
  };
  for (const auto &c : cases) {
    EXPECT_NEAR(bessel_j(c.nu, c.x), c.ref, 2e-15 + 1e-13 * std::abs(c.ref)) << c.nu << " " << c.x;
  }
  EXPECT_NEAR(bessel_j(49.0, 0.5) / 5.1809891410237091554e-93, 1.0, 1e-12);
}

TEST(BesselJ, OracleAgreesOnSpotChecks) {
  EXPECT_EQ(bessel_j_oracle(0.0, 0.0), 1.0);
  EXPECT_EQ(bessel_j_oracle(1.0, 0.0), 0.0);
  EXPECT_NEAR(bessel_j_oracle(2.4, 11.7), bessel_j(2.4, 11.7), 1e-10);
  EXPECT_NEAR(bessel_j_oracle(4.5, 7.3), 0.21923878709866570311, 1e-12);
  EXPECT_NEAR(bessel_j_oracle(0.2, 1e-3), 0.2381614175411533975, 1e-12);
}

TEST(BesselJ, OracleAgreementCoarseGrid) {
  double worst = 0.0;
  for (int i = 0; i < 12; ++i) {
    for (int k = 0; k < 12; ++k) {
      const double nu = 50.0 * i / 11.0 + 0.137;
      const double x = 50.0 * k / 11.0;
      worst = std::max(worst, std::abs(bessel_j(nu, x) - bessel_j_oracle(nu, x)));
    }
  }
  EXPECT_LE(worst, 1e-10);
}

TEST(BesselJ, SequenceMatchesPointwise) {
  for (double start : {-1.0, 0.0, 0.3, 1.5, 7.25}) {
    for (double x : {0.0, 0.4, 3.0, 11.9, 12.1, 29.0}) {
      const auto seq = bessel_j_sequence(start, 5, x);
      for (std::size_t k = 0; k < seq.size(); ++k) {
        EXPECT_NEAR(seq[k], bessel_j(start + k, x), 1e-15) << start << " " << x << " " << k;
      }
    }
  }
}

TEST(BesselJ, TripletAtZeroOrderUsesReflection) {
  const auto t = bessel_j_triplet(0.0, 2.0);
  EXPECT_EQ(t[0], -t[2]);
  EXPECT_NEAR(t[1], bessel_j(0.0, 2.0), 1e-16);
  EXPECT_THROW(bessel_j_triplet(0.5, 1.0), DomainError);
}

TEST(BesselJPrime, KnownIdentities) {
  for (double x : {0.5, 2.0, 9.0}) {
    EXPECT_NEAR(bessel_j_prime(0.0, x), -bessel_j(1.0, x), 1e-15);
  }
  EXPECT_NEAR(bessel_j_prime(1.0, 1e-8), 0.5, 1e-12);
}

TEST(BesselJPrime, MatchesCentralDifference) {
  const double h = 1e-5;
  const double fd = (bessel_j(1.5, 2.0 + h) - bessel_j(1.5, 2.0 - h)) / (2.0 * h);
  EXPECT_NEAR(bessel_j_prime(1.5, 2.0), fd, 1e-6);
  EXPECT_NEAR(bessel_j_prime(1.5, 2.0), 0.14454580254645599291, 1e-13);
  const double fd_small = (bessel_j(0.4, 3.0 + h) - bessel_j(0.4, 3.0 - h)) / (2.0 * h);
  EXPECT_NEAR(bessel_j_prime(0.4, 3.0), fd_small, 1e-6);
}

TEST(BesselJ, SumIdentities) {
  for (double x : {0.5, 5.0, 12.5, 20.0, 30.0}) {
    const int big_m = static_cast<int>(x) + 40;
    double squares = 0.0;
    double cross = 0.0;
    for (int m = -big_m; m <= big_m; ++m) {
      const double j = bessel_j(std::abs(m), x);
      squares += j * j;
      cross += bessel_j(std::abs(m) + 1, x) * bessel_j(std::abs(m) - 1, x);
    }
    EXPECT_NEAR(squares, 1.0, 1e-10) << x;
    EXPECT_NEAR(cross, 0.0, 1e-10) << x;
  }
}

TEST(BesselJ, LargeOrderDecayBound) {
  for (double nu : {10.0, 14.5, 25.0, 40.0}) {
    for (double x : {0.1, 1.0, 3.0, nu / 2.0}) {
      const double bound =
          std::exp(nu) * std::pow(x / (2.0 * nu), nu) / std::sqrt(2.0 * std::numbers::pi * nu);
      EXPECT_LE(std::abs(bessel_j(nu, x)), 1.01 * bound) << nu << " " << x;
    }
  }
}

TEST(BesselJ, DomainErrors) {
  EXPECT_THROW(bessel_j(-0.5, 1.0), DomainError);
  EXPECT_THROW(bessel_j(1.0, -1.0), DomainError);
  EXPECT_THROW(bessel_j(std::numeric_limits<double>::quiet_NaN(), 1.0), DomainError);
  EXPECT_THROW(bessel_j(1.0, std::numeric_limits<double>::infinity()), DomainError);
  EXPECT_THROW(bessel_j_oracle(-1.5, 1.0), DomainError);
  EXPECT_THROW(bessel_j_prime(1.0, 0.0), DomainError);
}

TEST(BesselConfig, Validation) {
  BesselConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.series_max_terms = 0;
  EXPECT_THROW(cfg.validate(), DomainError);
}
