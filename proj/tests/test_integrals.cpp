#include <gtest/gtest.h>

#include <cmath>

#include "repnorm/errors.hpp"
#include "repnorm/integrals.hpp"
#include "repnorm/norms.hpp"

using namespace repnorm;

TEST(BetaMeasure, Normalisation) {
  EXPECT_EQ(beta_measure(0.5).c, 0.5);
  EXPECT_EQ(beta_measure(1.0).c, 1.0);
  EXPECT_EQ(beta_measure(0.25).c, 0.25);
  EXPECT_THROW(beta_measure(0.0), DomainError);
}

TEST(Integrals, EasyCaseExamples) {
  EXPECT_NEAR(I_principal_quadrature(0.5, -0.5, 0, beta_measure(0.5)).value.real(), 0.5, 1e-12);
  EXPECT_NEAR(I_principal_easy_closed_form(0, beta_measure(0.5)).value.real(), 0.5, 1e-15);
  const double ref = 0.25 * std::exp(log_beta(3.0, 0.75));
  EXPECT_NEAR(I_principal_quadrature(0.5, -0.5, 4, beta_measure(0.25), 1e-12).value.real(), ref, 1e-10);
}

TEST(Integrals, EasyCaseSignsAndValues) {
  for (double eps : {0.25, 0.5, 0.75}) {
    for (long n = 0; n <= 128; n += 7) {
      const cplx q = I_principal_quadrature(0.5, -0.5, n, beta_measure(eps), 1e-13).value;
      const cplx c = I_principal_easy_closed_form(n, beta_measure(eps)).value;
      EXPECT_LE(std::abs(q - c), 1e-10);
      EXPECT_GT(q.real() * (n % 2 ? -1.0 : 1.0), 0.0);
    }
  }
}

TEST(Integrals, SeriesMatchesQuadrature) {
  for (long n : {4L, 8L, 16L, 32L, 64L}) {
    const cplx q = I_principal_quadrature(0.0, -0.5, n, beta_measure(0.25), 1e-12).value;
    const cplx s = I_principal_series(0.0, -0.5, n, beta_measure(0.25)).value;
    EXPECT_LE(std::abs(q - s), 1e-6 * std::abs(q)) << n;
  }
}

TEST(Integrals, JSeriesPreconditions) {
  EXPECT_THROW(J_series(0.5, -0.5, 0, 0.25), DomainError);
  EXPECT_THROW(J_series(0.0, -0.5, -1, 0.25), DomainError);
  EXPECT_THROW(J_series(0.0, -0.5, 1, 0.0), DomainError);
}

TEST(Integrals, JSeriesExponent) {
  std::vector<double> ns, v;
  for (double n = 64; n <= 4096; n *= 2) {
    ns.push_back(n);
    v.push_back(std::abs(J_series(0.0, -0.5, long(n), 0.25).value));
  }
  EXPECT_NEAR(fit_exponent(ns, v, false).alpha, -0.25, 0.05);
}

TEST(Integrals, QuadratureStableUnderTighterTolerance) {
  for (long n : {3L, 17L}) {
    const IntegralValue a = I_principal_quadrature(0.0, cplx(-0.5, 1.0), n, beta_measure(0.3), 1e-8);
    const IntegralValue b = I_principal_quadrature(0.0, cplx(-0.5, 1.0), n, beta_measure(0.3), 1e-12);
    EXPECT_LE(std::abs(a.value - b.value), std::max(a.err_est, 1e-8 * std::abs(b.value)) * 10);
  }
}

TEST(Integrals, ComplementaryMatchesDirectQuadrature) {
  const RepSpec r = RepSpec::complementary(-0.25);
  for (long n : {0L, 1L, 6L, 20L}) {
    const cplx a = I_complementary(-0.25, n, beta_measure(0.25), 1e-12).value;
    const cplx b = integrate_coefficient(r, double(n), 0.0, beta_measure(0.25), 1e-12).value;
    EXPECT_GT(std::abs(a), 0.0);
    EXPECT_LE(std::abs(a - b), 1e-8 * std::abs(b)) << n;
  }
}

TEST(Integrals, DiscreteFiniteSum) {
  const BetaMeasure b = beta_measure(0.5);
  for (double n : {1.0, 2.0, 9.0, 30.0}) {
    const cplx s = I_discrete(2, 1, n, beta_measure(0.25)).value;
    const cplx q = integrate_coefficient(RepSpec::discrete(2), n, 1, beta_measure(0.25), 1e-12).value;
    EXPECT_LE(std::abs(s - q), 1e-9 * std::max(1.0, std::abs(q))) << n;
  }
  for (double n = 1.5; n <= 32.5; n += 1.0) {
    const cplx s = I_discrete(3, 1.5, n, b).value;
    const cplx q = integrate_coefficient(RepSpec::discrete(3), n, 1.5, b, 1e-12).value;
    EXPECT_LE(std::abs(s - q), 1e-9 * std::max(1.0, std::abs(q))) << n;
  }
  EXPECT_THROW(I_discrete(2, 1, 1.5, b), DomainError);
}

TEST(Lemmas, Faulhaber) {
  const FaulhaberResult f = faulhaber_sum(0.5, 100);
  EXPECT_NEAR(f.exact.real(), 18.5896, 1e-4);
  EXPECT_LT(std::abs(f.difference), 1e-3);
  for (long n : {1000L, 2000L}) {
    const double r = std::abs(faulhaber_sum(cplx(1, 1), 2 * n).difference) / std::abs(faulhaber_sum(cplx(1, 1), n).difference);
    EXPECT_LE(r, 0.6);
  }
}

TEST(Lemmas, Stirling) {
  EXPECT_EQ(stirling_ratio_check(50.0, 0.0), 0.0);
  EXPECT_NEAR(stirling_ratio_check(50.0, 1.0), 0.0, 1e-12);
  for (cplx a : {cplx(0.5), cplx(-0.5, 0.3)}) {
    const double base = stirling_ratio_check(1e2, a);
    for (double z : {1e3, 1e4}) EXPECT_LT(stirling_ratio_check(z, a), 2 * base);
  }
}
