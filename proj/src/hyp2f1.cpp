#include "repnorm/hyp2f1.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "repnorm/errors.hpp"
#include "repnorm/quadrature.hpp"

namespace repnorm {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Compensated complex accumulator.
struct Neumaier {
  double re = 0.0, ce_re = 0.0, im = 0.0, ce_im = 0.0;
  static void add(double& s, double& c, double v) {
    double t = s + v;
    if (std::fabs(s) >= std::fabs(v))
      c += (s - t) + v;
    else
      c += (v - t) + s;
    s = t;
  }
  void add(cplx v) {
    add(re, ce_re, v.real());
    add(im, ce_im, v.imag());
  }
  cplx value() const { return {re + ce_re, im + ce_im}; }
};

// Upper bound, valid for all j >= k, on |(a+j)(b+j) / ((c+j)(j+1))|.
// Infinite when c + j may still vanish or shrink.
double ratio_bound(cplx a, cplx b, cplx c, double k) {
  double cre = c.real() + k;
  if (cre <= 0.0) return std::numeric_limits<double>::infinity();
  auto pairing = [&](cplx p, cplx q) {
    return (1.0 + std::abs(p - 1.0) / (k + 1.0)) * (1.0 + std::abs(q - c) / cre);
  };
  return std::min(pairing(a, b), pairing(b, a));
}

Hyp2F1Result terminating_sum(cplx a, cplx b, cplx c, double z, long k) {
  long cpole;
  if (is_nonpositive_integer(c, &cpole) && cpole < k)
    throw PoleError("hyp2f1: c is a pole reached before termination");
  Neumaier sum;
  cplx term = 1.0;
  double abs_sum = 0.0;
  for (long m = 0; m <= k; ++m) {
    sum.add(term);
    abs_sum += std::abs(term);
    double md = static_cast<double>(m);
    term *= (a + md) * (b + md) / ((c + md) * (md + 1.0)) * z;
  }
  return {sum.value(), 4.0 * kEps * abs_sum, k + 1, Hyp2F1Method::Terminating};
}

}  // namespace

const char* hyp2f1_method_name(Hyp2F1Method m) {
  switch (m) {
    case Hyp2F1Method::Terminating: return "terminating";
    case Hyp2F1Method::GaussSeries: return "gauss_series";
    case Hyp2F1Method::Boundary: return "boundary";
    case Hyp2F1Method::EulerIntegral: return "euler_integral";
  }
  return "unknown";
}

Hyp2F1Result hyp2f1(cplx a, cplx b, cplx c, double z, double tol, long max_terms) {
  if (!std::isfinite(z)) throw DomainError("hyp2f1: non-finite argument");
  long ka, kb;
  bool ta = is_nonpositive_integer(a, &ka);
  bool tb = is_nonpositive_integer(b, &kb);
  if (ta || tb) {
    long k = ta && tb ? std::min(ka, kb) : (ta ? ka : kb);
    return terminating_sum(a, b, c, z, k);
  }
  if (is_nonpositive_integer(c)) throw PoleError("hyp2f1: c is a non-positive integer");
  if (!(z >= 0.0 && z < 1.0)) throw DomainError("hyp2f1: series requires 0 <= z < 1");
  if (z == 0.0) return {1.0, 0.0, 1, Hyp2F1Method::GaussSeries};

  Neumaier sum;
  cplx term = 1.0;
  double abs_sum = 0.0;
  for (long k = 0; k < max_terms; ++k) {
    sum.add(term);
    abs_sum += std::abs(term);
    double kd = static_cast<double>(k);
    term *= (a + kd) * (b + kd) / ((c + kd) * (kd + 1.0)) * z;
    double r = z * ratio_bound(a, b, c, kd + 1.0);
    if (r < 1.0) {
      double tail = std::abs(term) / (1.0 - r);
      double s = std::abs(sum.value());
      if (tail <= tol * s || (s == 0.0 && tail == 0.0)) {
        return {sum.value(), tail + 2.0 * kEps * abs_sum, k + 1, Hyp2F1Method::GaussSeries};
      }
    }
  }
  throw ConvergenceError("hyp2f1: Gauss series did not converge within the term budget");
}

Hyp2F1NearOne::Hyp2F1NearOne(cplx a, cplx b, cplx c) : a_(a), b_(b), c_(c), s_(c - a - b) {
  const double sr = std::round(s_.real());
  const bool integer_s = s_.imag() == 0.0 && std::fabs(s_.real() - sr) < 1e-12;
  if (!integer_s) {
    A_ = gamma_ratio_signed({c, s_}, {c - a, c - b});
    B_ = gamma_ratio_signed({c, -s_}, {a, b});
    return;
  }
  if (sr != 0.0) throw DomainError("hyp2f1_near_one: integer c - a - b other than 0");
  if (is_nonpositive_integer(a) || is_nonpositive_integer(b))
    throw DomainError("hyp2f1_near_one: degenerate logarithmic case");
  log_case_ = true;
  pre_ = gamma_ratio_signed({a + b}, {a, b});
  h0_ = 2.0 * digamma(cplx(1.0)) - digamma(a) - digamma(b);
}

Hyp2F1Result Hyp2F1NearOne::operator()(double w, double tol, long max_terms) const {
  if (!(w > 0.0 && w < 1.0)) throw DomainError("hyp2f1_near_one: requires 0 < w < 1");
  if (!log_case_) {
    // F = A F(a, b; 1-s; w) + B w^s F(c-a, c-b; 1+s; w)
    Hyp2F1Result r1 = hyp2f1(a_, b_, 1.0 - s_, w, tol, max_terms);
    cplx value = A_ * r1.value;
    double err = std::abs(A_) * r1.err_est;
    long terms = r1.terms;
    if (B_ != 0.0) {
      Hyp2F1Result r2 = hyp2f1(c_ - a_, c_ - b_, 1.0 + s_, w, tol, max_terms);
      cplx ws = std::exp(s_ * std::log(w));
      value += B_ * ws * r2.value;
      err += std::abs(B_ * ws) * r2.err_est;
      terms += r2.terms;
    }
    err += 4.0 * kEps * std::abs(value);
    return {value, err, terms, Hyp2F1Method::Boundary};
  }
  // c = a + b:
  // F = Gamma(a+b)/(Gamma(a)Gamma(b)) sum (a)_k (b)_k / k!^2
  //       [2 psi(k+1) - psi(a+k) - psi(b+k) - log w] w^k
  cplx h = h0_ - std::log(w);
  cplx term = 1.0;
  Neumaier sum;
  double abs_sum = 0.0;
  for (long k = 0; k < max_terms; ++k) {
    cplx piece = term * h;
    sum.add(piece);
    abs_sum += std::abs(piece);
    double kd = static_cast<double>(k);
    term *= (a_ + kd) * (b_ + kd) / ((kd + 1.0) * (kd + 1.0)) * w;
    h += 2.0 / (kd + 1.0) - 1.0 / (a_ + kd) - 1.0 / (b_ + kd);
    double r = w * ratio_bound(a_, b_, cplx(1.0), kd + 1.0);
    if (r < 1.0) {
      // |h_j| grows at most logarithmically; pad the bound accordingly.
      double tail = std::abs(term) * (std::abs(h) + 4.0 * std::log(2.0 + kd) + 10.0) / (1.0 - r);
      double sabs = std::abs(sum.value());
      if (tail <= tol * sabs) {
        cplx value = pre_ * sum.value();
        double err = std::abs(pre_) * (tail + 2.0 * kEps * abs_sum) + 4.0 * kEps * std::abs(value);
        return {value, err, k + 1, Hyp2F1Method::Boundary};
      }
    }
  }
  throw ConvergenceError("hyp2f1_near_one: logarithmic series did not converge");
}

Hyp2F1Result hyp2f1_near_one(cplx a, cplx b, cplx c, double w, double tol, long max_terms) {
  return Hyp2F1NearOne(a, b, c)(w, tol, max_terms);
}

Hyp2F1Result hyp2f1_euler_oracle(cplx a, cplx b, cplx c, double z, double rel_tol) {
  if (!(c.real() > b.real() && b.real() > 0.0))
    throw PreconditionError("hyp2f1_euler_oracle: requires Re c > Re b > 0");
  if (!(z < 1.0)) throw DomainError("hyp2f1_euler_oracle: requires z < 1");
  const cplx cb = c - b;
  // Substitutions t = s^p near 0 and 1 - t = s^q near 1 remove the endpoint
  // singularities of t^{b-1} and (1-t)^{c-b-1}.
  const double p = b.real() < 1.0 ? 1.0 / b.real() : 1.0;
  const double q = cb.real() < 1.0 ? 1.0 / cb.real() : 1.0;
  auto integrand_t = [&](double logt, double log1mt, double t) {
    return std::exp((b - 1.0) * logt + (cb - 1.0) * log1mt - a * std::log1p(-z * t));
  };
  auto left = [&](double s) -> cplx {
    if (s <= 0.0) return 0.0;
    double logt = p * std::log(s);
    double t = std::exp(logt);
    cplx v = integrand_t(logt, std::log1p(-t), t);
    return v * (p * std::exp((p - 1.0) * std::log(s)));
  };
  auto right = [&](double s) -> cplx {
    if (s <= 0.0) return 0.0;
    double log1mt = q * std::log(s);
    double omt = std::exp(log1mt);
    double t = 1.0 - omt;
    cplx v = integrand_t(std::log1p(-omt), log1mt, t);
    return v * (q * std::exp((q - 1.0) * std::log(s)));
  };
  const double sl = std::pow(0.5, 1.0 / p);
  const double sr = std::pow(0.5, 1.0 / q);
  QuadResult ql = integrate_adaptive(left, 0.0, sl, 0.0, rel_tol * 0.25, 20000);
  QuadResult qr = integrate_adaptive(right, 0.0, sr, 0.0, rel_tol * 0.25, 20000);
  cplx pre = gamma_ratio_signed({c}, {b, cb});
  cplx value = pre * (ql.value + qr.value);
  double err = std::abs(pre) * (ql.err_est + qr.err_est);
  return {value, err, ql.evaluations + qr.evaluations, Hyp2F1Method::EulerIntegral};
}

}  // namespace repnorm
