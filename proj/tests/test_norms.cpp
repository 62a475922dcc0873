#include <gtest/gtest.h>

#include <cmath>

#include "repnorm/errors.hpp"
#include "repnorm/norms.hpp"

using namespace repnorm;

TEST(Sobolev, Multiplier) {
  EXPECT_EQ(sobolev_multiplier(0, 3.7), 1.0);
  EXPECT_NEAR(sobolev_multiplier(2, 1), std::sqrt(5.0), 1e-15);
  EXPECT_NEAR(sobolev_multiplier(3, -2), 0.1, 1e-16);
  for (double k : {1.0, 5.0, 100.0}) {
    double prev = 0.0;
    for (double s = -2.0; s <= 2.0; s += 0.25) {
      const double v = sobolev_multiplier(k, s);
      EXPECT_GT(v, prev);
      prev = v;
      EXPECT_NEAR(v * sobolev_multiplier(k, -s), 1.0, 4e-16);
    }
  }
}

TEST(Sobolev, Norm) {
  EXPECT_EQ(sobolev_norm({{0, 1.0}}, 2.5), 1.0);
  EXPECT_NEAR(sobolev_norm({{2, 1.0}}, 1.0), std::sqrt(5.0), 1e-15);
  EXPECT_NEAR(sobolev_norm({{0, 1 / std::sqrt(2.0)}, {2, 1 / std::sqrt(2.0)}}, 0.0), 1.0, 1e-15);
}

TEST(Scan, DiagonalIsOne) {
  for (const char* d : {"principal:0:-0.5+1i", "complementary:-0.25", "discrete:2"}) {
    const RepSpec r = RepSpec::parse(d);
    const NormSample s = pmin_scan(r, r.default_m(), r.default_m());
    EXPECT_NEAR(s.value, 1.0, 1e-12) << d;
    EXPECT_NEAR(pmax_lower_proxy(r, r.default_m(), r.default_m()), 1.0, 1e-12);
  }
  const NormSample s = pmin_scan(RepSpec::discrete(2), 1, 1);
  EXPECT_EQ(s.x_argmax, 0.0);
}

TEST(Scan, DominatesSeeds) {
  const RepSpec r = RepSpec::parse("principal:0:-0.5+1i");
  for (double n : {8.0, 64.0}) {
    const NormSample s = pmin_scan(r, 0, n);
    const double kappa = std::fabs(2 * n);
    for (double u : {0.5, 1.0, 2.0}) {
      const double x = 1.0 - 1.0 / (1.0 + kappa / u);
      EXPECT_GE(s.value, std::abs(coefficient(r, n, 0, CartanCoord::from_x(x)).value));
    }
  }
}

TEST(Scan, GridRobustness) {
  ScanConfig fine;
  fine.c_grid = 0.05;
  for (const char* d : {"principal:0:-0.5+1i", "complementary:-0.25", "discrete:2"}) {
    const RepSpec r = RepSpec::parse(d);
    for (double n0 : {16.0, 128.0, 512.0}) {
      const double n = r.contains(n0) ? n0 : n0 + 0.5;
      const double a = pmin_scan(r, r.default_m(), n).value, b = pmin_scan(r, r.default_m(), n, fine).value;
      EXPECT_LT(std::fabs(a - b), 0.005 * b) << d << " " << n;
    }
  }
}

TEST(Scan, InvalidInput) {
  EXPECT_THROW(pmin_scan(RepSpec::discrete(2), 1, 1.5), DomainError);
  ScanConfig bad;
  bad.c_grid = 0;
  EXPECT_THROW(pmin_scan(RepSpec::discrete(2), 1, 2, bad), DomainError);
}

namespace {

std::vector<double> ns() { return {2, 4, 8, 16, 32, 64, 128}; }

}  // namespace

TEST(Fit, RecoversPlantedExponents) {
  for (double alpha : {-1.0, -0.5, 0.0, 0.5}) {
    std::vector<double> v;
    for (double n : ns()) v.push_back(3.0 * std::pow(1.0 + n, alpha));
    const FitResult f = fit_exponent(ns(), v, false);
    EXPECT_NEAR(f.alpha, alpha, 1e-10);
    EXPECT_EQ(f.beta, 0.0);
    EXPECT_NEAR(f.amplitude, 3.0, 1e-10);
    EXPECT_LT(f.residual_rms, 1e-12);
    EXPECT_EQ(f.n_min, 2.0);
    EXPECT_EQ(f.n_max, 128.0);
  }
}

TEST(Fit, LogTerm) {
  std::vector<double> v;
  for (double n : ns()) v.push_back(std::pow(1.0 + n, -0.5) * std::log(std::exp(1.0) + n));
  const FitResult f = fit_exponent(ns(), v, true);
  EXPECT_NEAR(f.alpha, -0.5, 1e-6);
  EXPECT_NEAR(f.beta, 1.0, 1e-6);
}

TEST(Fit, Errors) {
  EXPECT_THROW(fit_exponent({2, 4, 8, 16}, {1, 1, 1, 1}, false), FitError);
  EXPECT_THROW(fit_exponent({1, 4, 8, 16, 32}, {1, 1, 1, 1, 1}, false), FitError);
  EXPECT_THROW(fit_exponent({2, 4, 8, 16, 32}, {1, 1, 0, 1, 1}, false), FitError);
  EXPECT_THROW(fit_exponent({4, 4, 4, 4, 4}, {1, 2, 3, 4, 5}, false), FitError);
}

TEST(Distance, Examples) {
  std::vector<NormSample> p, q;
  for (long k : {4L, 8L, 16L, 32L, 64L, 128L}) {
    NormSample s;
    s.kappa = k;
    s.value = 2.0;
    q.push_back(s);
    s.value = 2.0 * std::pow(1.0 + double(k) * k, 0.25);
    p.push_back(s);
  }
  EXPECT_NEAR(distance_estimate(q, q), 0.0, 1e-12);
  EXPECT_NEAR(distance_estimate(p, q), 0.5, 1e-12);
  EXPECT_EQ(distance_estimate(q, p), 0.0);  // clamped
}

TEST(Geometric, ShiftsIntoBasis) {
  EXPECT_EQ(geometric_indices(RepSpec::discrete(3), 16, 64), (std::vector<double>{16.5, 32.5, 64.5}));
  EXPECT_EQ(geometric_indices(RepSpec::discrete(2), 16, 2048).size(), 8u);
}
