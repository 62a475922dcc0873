#include "repnorm/group.hpp"

#include <algorithm>
#include <cmath>

#include "repnorm/errors.hpp"

namespace repnorm {

CartanCoord CartanCoord::from_t(double t) {
  if (!std::isfinite(t) || t < 0.0) throw DomainError("cartan_from_t: t must be finite and >= 0");
  double sech = 1.0 / std::cosh(t);
  double th = std::tanh(t);
  return CartanCoord(th * th, t, sech * sech);
}

CartanCoord CartanCoord::from_x(double x) {
  if (!(x >= 0.0 && x < 1.0)) throw DomainError("cartan_from_x: x must lie in [0, 1)");
  return CartanCoord(x, std::atanh(std::sqrt(x)), 1.0 - x);
}

CartanCoord CartanCoord::from_one_minus_x(double w) {
  if (!(w > 0.0 && w <= 1.0)) throw DomainError("cartan_from_one_minus_x: w must lie in (0, 1]");
  // tanh t = sqrt(1 - w), cosh t = 1/sqrt(w)
  double t = std::acosh(1.0 / std::sqrt(w));
  return CartanCoord(1.0 - w, t, w);
}

GroupElement::GroupElement(cplx alpha, cplx beta, double tol) : alpha_(alpha), beta_(beta) {
  if (!(std::fabs(determinant() - 1.0) <= tol))
    throw DomainError("GroupElement: |alpha|^2 - |beta|^2 must equal 1");
}

GroupElement GroupElement::from_cartan(const CartanCoord& c) {
  return GroupElement(c.alpha(), c.beta(), Unchecked{});
}

GroupElement GroupElement::rotation(double theta) {
  return GroupElement(std::polar(1.0, theta), 0.0, Unchecked{});
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
  cplx a = alpha_ * o.alpha_ + beta_ * std::conj(o.beta_);
  cplx b = alpha_ * o.beta_ + beta_ * std::conj(o.alpha_);
  return GroupElement(a, b, Unchecked{});
}

GroupElement GroupElement::inverse() const {
  return GroupElement(std::conj(alpha_), -beta_, Unchecked{});
}

CartanCoord GroupElement::cartan() const { return CartanCoord::from_t(std::asinh(std::abs(beta_))); }

WeightSpec WeightSpec::log(double d) {
  if (!(d >= 0.0)) throw DomainError("WeightSpec::log: d must be >= 0");
  WeightSpec w;
  w.kind = WeightKind::Log;
  w.d = d;
  return w;
}

WeightSpec WeightSpec::exp(double mu) {
  if (!std::isfinite(mu)) throw DomainError("WeightSpec::exp: mu must be finite");
  WeightSpec w;
  w.kind = WeightKind::Exp;
  w.mu = mu;
  return w;
}

WeightSpec WeightSpec::envelope(std::vector<double> exponents) {
  WeightSpec w;
  w.kind = WeightKind::Envelope;
  w.exponents = std::move(exponents);
  return w;
}

WeightSpec WeightSpec::minimal(int d, std::vector<double> exponents_pp) {
  if (d < 0) throw DomainError("WeightSpec::minimal: d must be >= 0");
  WeightSpec w;
  w.kind = WeightKind::MinimalWeight;
  w.d = d;
  w.exponents = std::move(exponents_pp);
  return w;
}

double weight_eval(const WeightSpec& w, double t) {
  if (!(t >= 0.0)) throw DomainError("weight_eval: t must be >= 0");
  auto sup_exp = [&](double floor) {
    double best = floor;
    for (double lam : w.exponents)
      if (lam != 0.0) best = std::max(best, std::exp(std::fabs(lam) * t));
    return best;
  };
  switch (w.kind) {
    case WeightKind::Log: return std::pow(1.0 + t, w.d);
    case WeightKind::Exp: return std::exp(std::fabs(w.mu) * t);
    case WeightKind::Envelope: return sup_exp(1.0);
    case WeightKind::MinimalWeight: return std::pow(1.0 + t, w.d) * sup_exp(1.0);
  }
  return 1.0;
}

double weight_eval(const WeightSpec& w, const CartanCoord& c) { return weight_eval(w, c.t()); }

double weight_infimum(const WeightSpec& w1, const WeightSpec& w2, const CartanCoord& c,
                      int grid) {
  if (grid < 16) throw DomainError("weight_infimum: grid must be >= 16");
  const double t = c.t();
  auto f = [&](double t1) {
    t1 = std::clamp(t1, 0.0, t);
    return weight_eval(w1, t1) * weight_eval(w2, t - t1);
  };
  if (t == 0.0) return f(0.0);
  const double h = t / grid;
  int best = 0;
  double best_val = f(0.0);
  for (int i = 1; i <= grid; ++i) {
    double v = f(i * h);
    if (v < best_val) {
      best_val = v;
      best = i;
    }
  }
  double lo = std::max(0.0, (best - 1) * h), hi = std::min(t, (best + 1) * h);
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = hi - g * (hi - lo), b = lo + g * (hi - lo);
  double fa = f(a), fb = f(b);
  for (int it = 0; it < 80; ++it) {
    if (fa < fb) {
      hi = b;
      b = a;
      fb = fa;
      a = hi - g * (hi - lo);
      fa = f(a);
    } else {
      lo = a;
      a = b;
      fa = fb;
      b = lo + g * (hi - lo);
      fb = f(b);
    }
  }
  return std::min({best_val, fa, fb});
}

}  // namespace repnorm
