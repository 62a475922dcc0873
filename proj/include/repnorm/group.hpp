#pragma once

#include <cmath>
#include <vector>

#include "repnorm/specfun.hpp"

namespace repnorm {

// Point of the closed positive chamber, x = tanh^2 t. The complement
// w = 1 - x = sech^2 t is stored separately so that points close to x = 1
// keep full relative precision.
class CartanCoord {
 public:
  static CartanCoord from_t(double t);
  static CartanCoord from_x(double x);
  // From w = 1 - x in (0, 1].
  static CartanCoord from_one_minus_x(double w);

  double x() const { return x_; }
  double t() const { return t_; }
  double one_minus_x() const { return w_; }
  // a_x = [[alpha, beta], [beta, alpha]].
  double alpha() const { return 1.0 / std::sqrt(w_); }
  double beta() const { return std::sqrt(x_ / w_); }

 private:
  CartanCoord(double x, double t, double w) : x_(x), t_(t), w_(w) {}
  double x_, t_, w_;
};

// Element [[alpha, beta], [conj(beta), conj(alpha)]] of SU(1,1).
class GroupElement {
 public:
  GroupElement(cplx alpha, cplx beta, double tol = 1e-12);
  static GroupElement identity() { return GroupElement(1.0, 0.0); }
  static GroupElement from_cartan(const CartanCoord& c);
  // k_theta = diag(e^{i theta}, e^{-i theta}).
  static GroupElement rotation(double theta);

  cplx alpha() const { return alpha_; }
  cplx beta() const { return beta_; }
  double determinant() const { return std::norm(alpha_) - std::norm(beta_); }
  GroupElement operator*(const GroupElement& o) const;
  GroupElement inverse() const;
  // Cartan coordinate of the K-double coset K g K.
  CartanCoord cartan() const;

 private:
  struct Unchecked {};
  GroupElement(cplx alpha, cplx beta, Unchecked) : alpha_(alpha), beta_(beta) {}
  cplx alpha_, beta_;
};

enum class WeightKind { Log, Exp, Envelope, MinimalWeight };

struct WeightSpec {
  WeightKind kind = WeightKind::Log;
  double d = 0.0;                 // Log, MinimalWeight
  double mu = 0.0;                // Exp
  std::vector<double> exponents;  // Envelope, MinimalWeight

  static WeightSpec log(double d);
  static WeightSpec exp(double mu);
  static WeightSpec envelope(std::vector<double> exponents);
  static WeightSpec minimal(int d, std::vector<double> exponents_pp);
};

double weight_eval(const WeightSpec& w, const CartanCoord& c);
double weight_eval(const WeightSpec& w, double t);

// Upper bound for the infimum of w1(t1) w2(t - t1) over splittings of t
// inside A; grid sampling followed by golden-section refinement.
double weight_infimum(const WeightSpec& w1, const WeightSpec& w2, const CartanCoord& c,
                      int grid = 64);

}  // namespace repnorm
