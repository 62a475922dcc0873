#include <gtest/gtest.h>

#include <cmath>

#include "repnorm/errors.hpp"
#include "repnorm/norms.hpp"
#include "repnorm/reps.hpp"

using namespace repnorm;

namespace {

const char* const kUnitary[] = {"principal:0:-0.5+1i", "principal:0.5:-0.5+0.7i", "complementary:-0.25", "discrete:2",
                                "discrete:3"};

}  // namespace

TEST(RepSpec, ParseAndDescriptor) {
  const RepSpec p = RepSpec::parse("principal:0.5:-0.5-0.7i");
  EXPECT_EQ(p.kind, RepKind::Principal);
  EXPECT_EQ(p.sigma, 0.5);
  EXPECT_EQ(p.lambda, cplx(-0.5, -0.7));
  EXPECT_TRUE(p.unitary());
  EXPECT_EQ(RepSpec::parse(p.descriptor()).lambda, p.lambda);
  EXPECT_EQ(RepSpec::parse("discrete:3").ell, 3);
  EXPECT_FALSE(RepSpec::parse("principal:0:-0.2").unitary());
  EXPECT_THROW(RepSpec::parse("complementary:-0.7"), DomainError);
  EXPECT_THROW(RepSpec::parse("discrete:1"), DomainError);
  EXPECT_THROW(RepSpec::parse("principal:0.3:-0.5"), DomainError);
  EXPECT_THROW(RepSpec::parse("bogus"), DomainError);
}

TEST(RepSpec, KSpectrum) {
  EXPECT_EQ(k_spectrum(RepSpec::parse("principal:0:-0.5"), 5), (std::vector<long>{-4, -2, 0, 2, 4}));
  EXPECT_EQ(k_spectrum(RepSpec::parse("discrete:2"), 6), (std::vector<long>{2, 4, 6}));
  EXPECT_EQ(k_spectrum(RepSpec::parse("discrete:3"), 7), (std::vector<long>{3, 5, 7}));
  EXPECT_EQ(RepSpec::parse("discrete:3").k_character(2.5), 5);
  EXPECT_THROW(RepSpec::parse("discrete:3").k_character(2.0), DomainError);
}

TEST(Coefficients, IdentityIsDelta) {
  const CartanCoord c0 = CartanCoord::from_x(0.0);
  for (const char* d : kUnitary) {
    const RepSpec r = RepSpec::parse(d);
    const double m = r.default_m();
    for (double k = 0; k < 6; ++k) {
      const double n = m + k;
      EXPECT_NEAR(std::abs(coefficient(r, n, m, c0).value - (k == 0 ? 1.0 : 0.0)), 0.0, 1e-12) << d << " " << n;
      EXPECT_NEAR(std::abs(coefficient(r, m, n, c0).value - (k == 0 ? 1.0 : 0.0)), 0.0, 1e-12) << d << " " << n;
    }
  }
  EXPECT_EQ(coef_principal(0.5, -0.5, 2, 0, c0).value, cplx(0.0));
}

TEST(Coefficients, DiscreteTwoClosedForm) {
  for (double x : {0.0, 0.3, 0.77}) {
    EXPECT_NEAR(std::abs(coef_discrete(2, 1, 1, CartanCoord::from_x(x)).value - (1.0 - x)), 0.0, 1e-14);
  }
}

TEST(Coefficients, PrincipalZeroZeroAgainstOracle) {
  const CartanCoord c = CartanCoord::from_x(0.5);
  const cplx v = coef_principal(0.0, -0.5, 0, 0, c).value;
  const cplx o = coef_oracle_principal(0.0, -0.5, 0, c, 4).at(0);
  EXPECT_NEAR(std::abs(v - o), 0.0, 1e-12);
  EXPECT_NEAR(v.imag(), 0.0, 1e-15);
  // (1-x)^{1/2} 2F1(1/2, 1/2; 1; x) = (1-x)^{1/2} (2/pi) K(x).
  EXPECT_NEAR(v.real(), std::sqrt(0.5) * 2.0 / kPi * std::comp_ellint_1(std::sqrt(0.5)), 1e-13);
}

TEST(Coefficients, ComplementaryNormalization) {
  EXPECT_EQ(complementary_normalization(-0.25, 0, 0), 1.0);
  EXPECT_NEAR(complementary_normalization(-0.25, 7, 3), complementary_normalization(-0.25, -7, -3), 1e-14);
  // H(n) ~ n^{1+2 lambda}, so C(2n,0)/C(n,0) -> 2^{(1+2 lambda)/2} = 2^{1/4}.
  for (long n : {256L, 1024L})
    EXPECT_NEAR(complementary_normalization(-0.25, 2 * n, 0) / complementary_normalization(-0.25, n, 0),
                std::pow(2.0, 0.25), 0.02 * std::pow(2.0, 0.25));
  EXPECT_THROW(complementary_normalization(-0.6, 1, 0), DomainError);
}

TEST(Coefficients, DiscreteOracle) {
  EXPECT_NEAR(std::abs(coef_oracle_discrete(2, 1, CartanCoord::from_x(0.3), 4).at(1.0) - 0.7), 0.0, 1e-9);
  for (int ell : {2, 3, 4}) {
    for (double x : {0.2, 0.6, 0.95}) {
      const CartanCoord c = CartanCoord::from_x(x);
      for (double m = 0.5 * ell; m < 0.5 * ell + 4; m += 1.0) {
        for (const auto& [n, o] : coef_oracle_discrete(ell, m, c, 0.5 * ell + 40)) {
          const cplx v = coef_discrete(ell, n, m, c).value;
          EXPECT_LE(std::abs(v - o), 1e-8 * std::max(std::abs(o), 1e-6)) << ell << " " << x << " " << m << " " << n;
        }
      }
    }
  }
  EXPECT_EQ(coef_oracle_discrete(3, 1.5, CartanCoord::from_x(0.0), 5.5).at(1.5), cplx(1.0));
}

TEST(Coefficients, PrincipalOracleIdentityColumn) {
  const auto col = coef_oracle_principal(0.0, cplx(-0.5, 1.0), 2, CartanCoord::from_x(0.0), 6);
  for (const auto& [n, v] : col) EXPECT_NEAR(std::abs(v - (n == 2 ? 1.0 : 0.0)), 0.0, 1e-14);
}

TEST(Coefficients, AdjointSymmetry) {
  for (const char* d : kUnitary) {
    const RepSpec r = RepSpec::parse(d);
    const double base = r.default_m();
    for (double x : {0.3, 0.9}) {
      const CartanCoord c = CartanCoord::from_x(x);
      for (double i : {0.0, 1.0, 3.0})
        for (double j : {2.0, 5.0, 11.0}) {
          const double n = base + i, m = base + j;
          const double a = std::abs(coefficient(r, n, m, c).value), b = std::abs(coefficient(r, m, n, c).value);
          EXPECT_NEAR(a, b, 1e-8 * std::max(a, 1e-12)) << d << " " << n << " " << m;
        }
    }
  }
}

TEST(Coefficients, BoundaryRouteMatchesOracle) {
  for (double w : {1e-2, 1e-3, 1e-4}) {
    const CartanCoord c = CartanCoord::from_one_minus_x(w);
    const auto col = coef_oracle_principal(0.0, cplx(-0.5, 1.0), 0, c, 40);
    for (long n : {0L, 5L, 40L}) {
      const CoefValue v = coef_principal(0.0, cplx(-0.5, 1.0), n, 0, c);
      EXPECT_LE(std::abs(v.value - col.at(n)), 1e-9 * std::abs(col.at(n))) << w << " " << n;
    }
  }
}

TEST(Coefficients, ParsevalModerateX) {
  for (const char* d : kUnitary) {
    const RepSpec r = RepSpec::parse(d);
    const double m = r.default_m();
    const CartanCoord c = CartanCoord::from_x(0.5);
    double sum = 0.0;
    const double lo = r.kind == RepKind::Discrete ? m : m - 200;
    for (double n = lo; n <= m + 200; n += 1.0) sum += std::norm(coefficient(r, n, m, c).value);
    EXPECT_NEAR(sum, 1.0, 1e-10) << d;
  }
}

// Far beyond the location of the maximum the column decays; checked at the
// point 1 - x = 1e-6 (1 - x_argmax), relative to the scale of the maximum.
TEST(Coefficients, DecayBeyondMaximum) {
  for (const char* d : kUnitary) {
    const RepSpec r = RepSpec::parse(d);
    const double m = r.default_m();
    for (double n0 : {1.0, 4.0, 16.0, 64.0, 256.0}) {
      const double n = r.contains(n0) ? n0 : n0 + 0.5;
      const NormSample s = pmin_scan(r, m, n);
      const double w = 1e-6 * (1.0 - s.x_argmax);
      const double v = std::abs(coefficient(r, n, m, CartanCoord::from_one_minus_x(w)).value);
      EXPECT_LT(v, 0.1 * s.value) << d << " n = " << n;
    }
  }
}
