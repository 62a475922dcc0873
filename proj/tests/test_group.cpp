#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "repnorm/errors.hpp"
#include "repnorm/group.hpp"

using namespace repnorm;

TEST(Cartan, Examples) {
  const CartanCoord c0 = CartanCoord::from_t(0.0);
  EXPECT_EQ(c0.x(), 0.0);
  const GroupElement a0 = GroupElement::from_cartan(c0);
  EXPECT_EQ(a0.alpha(), cplx(1.0));
  EXPECT_EQ(a0.beta(), cplx(0.0));
  EXPECT_NEAR(CartanCoord::from_x(0.5).t(), 0.8813735870195430, 1e-14);
  EXPECT_NEAR(CartanCoord::from_x(CartanCoord::from_t(3.7).x()).t(), 3.7, 1e-13);
}

TEST(Cartan, XIsTanhSquared) {
  for (double t = 0.0; t < 20.0; t += 0.37) {
    const CartanCoord c = CartanCoord::from_t(t);
    EXPECT_NEAR(c.x(), std::tanh(t) * std::tanh(t), 1e-14);
    EXPECT_NEAR(c.one_minus_x(), 1.0 / (std::cosh(t) * std::cosh(t)), 1e-14 * c.one_minus_x() + 1e-300);
  }
  EXPECT_THROW(CartanCoord::from_x(1.0), DomainError);
  EXPECT_THROW(CartanCoord::from_t(-1.0), DomainError);
}

TEST(GroupElement, DeterminantOverRandomProducts) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  GroupElement g = GroupElement::identity();
  for (int i = 0; i < 1000; ++i) {
    const GroupElement h = GroupElement::rotation(6.283 * U(rng)) * GroupElement::from_cartan(CartanCoord::from_t(0.5 * U(rng))) *
                           GroupElement::rotation(6.283 * U(rng));
    const GroupElement p = g * h;
    EXPECT_NEAR(p.determinant(), 1.0, 1e-10);
    g = (i % 10 == 9) ? GroupElement::identity() : p;
  }
  EXPECT_THROW(GroupElement(2.0, 0.0), DomainError);
}

TEST(GroupElement, CartanOfDoubleCoset) {
  const CartanCoord c = CartanCoord::from_t(1.3);
  const GroupElement g = GroupElement::rotation(0.4) * GroupElement::from_cartan(c) * GroupElement::rotation(-2.1);
  EXPECT_NEAR(g.cartan().t(), 1.3, 1e-12);
  EXPECT_NEAR((g * g.inverse()).alpha().real(), 1.0, 1e-12);
}

TEST(Weights, Examples) {
  EXPECT_EQ(weight_eval(WeightSpec::exp(0.0), 3.0), 1.0);
  EXPECT_EQ(weight_eval(WeightSpec::envelope({0.0}), 3.0), 1.0);
  EXPECT_NEAR(weight_eval(WeightSpec::log(2.0), 1.0), 4.0, 1e-15);
  EXPECT_NEAR(weight_eval(WeightSpec::exp(-1.5), 2.0), std::exp(3.0), 1e-12);
}

TEST(Weights, Submultiplicative) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> U(0.0, 10.0);
  const WeightSpec kinds[] = {WeightSpec::log(1.5), WeightSpec::exp(0.7), WeightSpec::envelope({0.0, -0.3, 1.2}),
                              WeightSpec::minimal(2, {0.5, 1.0})};
  for (int i = 0; i < 200; ++i) {
    const double t1 = U(rng), t2 = U(rng);
    for (const WeightSpec& w : kinds)
      EXPECT_LE(weight_eval(w, t1 + t2), weight_eval(w, t1) * weight_eval(w, t2) * (1 + 1e-12));
  }
}

TEST(Weights, Infimum) {
  const CartanCoord c = CartanCoord::from_t(2.0);
  EXPECT_NEAR(weight_infimum(WeightSpec::exp(1.0), WeightSpec::exp(1.0), c), std::exp(2.0), 1e-9);
  EXPECT_NEAR(weight_infimum(WeightSpec::exp(1.0), WeightSpec::exp(0.0), c), 1.0, 1e-12);
  // min over t1 of (1 + t1)(3 - t1) on [0, 2] is 3, at the endpoints.
  EXPECT_NEAR(weight_infimum(WeightSpec::log(1.0), WeightSpec::log(1.0), c), 3.0, 1e-9);
  const WeightSpec w1 = WeightSpec::log(2.0), w2 = WeightSpec::exp(0.4);
  for (double t : {0.5, 1.0, 4.0}) {
    const double triv = std::min(weight_eval(w1, t) * weight_eval(w2, 0.0), weight_eval(w1, 0.0) * weight_eval(w2, t));
    EXPECT_LE(weight_infimum(w1, w2, CartanCoord::from_t(t)), triv * (1 + 1e-12));
  }
}
