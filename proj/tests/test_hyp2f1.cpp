#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "repnorm/errors.hpp"
#include "repnorm/hyp2f1.hpp"

using namespace repnorm;

TEST(Hyp2F1, Examples) {
  EXPECT_EQ(hyp2f1(cplx(0.3, 1.0), 2.0, 4.5, 0.0).value, cplx(1.0));
  EXPECT_NEAR(std::abs(hyp2f1(-1.0, 2.0, 4.0, 0.5).value - 0.75), 0.0, 1e-15);
  EXPECT_NEAR(hyp2f1(1.0, 1.0, 2.0, 0.5).value.real(), 2.0 * std::log(2.0), 1e-14);
  EXPECT_EQ(hyp2f1(-1.0, 2.0, 4.0, 0.5).method, Hyp2F1Method::Terminating);
}

TEST(Hyp2F1, TerminatingMatchesFiniteSum) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  for (int k = 0; k <= 30; ++k) {
    for (int i = 0; i < 10; ++i) {
      const double b = 0.1 + 4 * U(rng), c = 0.3 + 6 * U(rng), z = -5 * U(rng);
      long double term = 1, sum = 1;
      for (int j = 0; j < k; ++j) {
        term *= static_cast<long double>(j - k) * (b + j) / ((c + j) * (j + 1.0L)) * z;
        sum += term;
      }
      const double ref = static_cast<double>(sum);
      EXPECT_LE(std::abs(hyp2f1(-double(k), b, c, z).value - ref), 1e-13 * std::fabs(ref)) << k;
    }
  }
}

TEST(Hyp2F1, EulerRelationOn200Tuples) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const cplx a(2.0 * U(rng), U(rng)), b(2.0 * U(rng), U(rng)), c(2.5 + 1.5 * U(rng), U(rng));
    const double z = 0.45 * (U(rng) + 1.0);
    const cplx lhs = hyp2f1(a, b, c, z).value;
    const cplx rhs = std::pow(cplx(1.0 - z), c - a - b) * hyp2f1(c - a, c - b, c, z).value;
    EXPECT_LE(std::abs(lhs - rhs), 1e-10 * std::max(1.0, std::abs(lhs))) << a << b << c << z;
  }
}

TEST(Hyp2F1, EulerOracleExamples) {
  EXPECT_NEAR(std::abs(hyp2f1_euler_oracle(0.0, 1.5, 3.0, 0.7).value - 1.0), 0.0, 1e-13);
  EXPECT_NEAR(hyp2f1_euler_oracle(1.0, 1.0, 2.0, 0.5).value.real(), 2.0 * std::log(2.0), 1e-11);
  const cplx s = hyp2f1(0.5, 1.5, 3.0, 0.7).value, o = hyp2f1_euler_oracle(0.5, 1.5, 3.0, 0.7).value;
  EXPECT_LE(std::abs(s - o), 1e-9 * std::abs(o));
  EXPECT_THROW(hyp2f1_euler_oracle(1.0, 2.0, 1.5, 0.5), PreconditionError);
}

TEST(Hyp2F1, SeriesAgreesWithOracleOnRandomTuples) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const cplx a(-3 + 6 * U(rng), -1 + 2 * U(rng)), b(0.2 + 2.8 * U(rng), -1 + 2 * U(rng));
    const cplx c(b.real() + 0.2 + 2.8 * U(rng), -1 + 2 * U(rng));
    const double z = 0.9 * U(rng);
    const cplx o = hyp2f1_euler_oracle(a, b, c, z).value;
    EXPECT_LE(std::abs(hyp2f1(a, b, c, z).value - o), 1e-8 * std::abs(o));
  }
}

TEST(Hyp2F1, Errors) {
  EXPECT_THROW(hyp2f1(0.5, 0.5, -2.0, 0.3), PoleError);
  EXPECT_THROW(hyp2f1(0.5, 0.5, 1.0, 1.0), DomainError);
  EXPECT_THROW(hyp2f1(0.5, 0.5, 1.0, -0.5), DomainError);
  EXPECT_THROW(hyp2f1(0.5, 0.5, 1.0, 0.999999, 1e-15, 1000), ConvergenceError);
}

TEST(Hyp2F1, NearOneMatchesSeries) {
  // Non-integer and zero c - a - b.
  for (auto [a, b, c] : {std::tuple<cplx, cplx, cplx>{cplx(0.5, -1), cplx(20.5, -1), cplx(21)},
                         std::tuple<cplx, cplx, cplx>{cplx(0.5), cplx(20.5), cplx(21)},
                         std::tuple<cplx, cplx, cplx>{cplx(0.5, 1), cplx(0.5, -1), cplx(1)}}) {
    for (double w : {0.05, 0.02}) {
      const cplx s = hyp2f1(a, b, c, 1.0 - w).value, n = hyp2f1_near_one(a, b, c, w).value;
      EXPECT_LE(std::abs(s - n), 1e-10 * std::abs(s)) << a << b << c << w;
    }
  }
}
