#include "repnorm/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "repnorm/errors.hpp"

namespace repnorm {

namespace {

constexpr double kLogPi = 1.14472988584940017414342735135305871;
constexpr double kHalfLog2Pi = 0.91893853320467274178032973640561764;

// B_2, B_4, ..., B_24
constexpr std::array<double, 12> kBernoulli = {
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
};

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

cplx log_gamma_stirling(cplx z) {
  cplx zinv = 1.0 / z;
  cplx zinv2 = zinv * zinv;
  cplx series = 0.0;
  cplx p = zinv;
  for (int k = 1; k <= 9; ++k) {
    series += kBernoulli[k - 1] / (2.0 * k * (2.0 * k - 1.0)) * p;
    p *= zinv2;
  }
  return (z - 0.5) * std::log(z) - z + kHalfLog2Pi + series;
}

}  // namespace

double sinpi(double x) {
  if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
  double r = std::remainder(x, 2.0);  // [-1, 1]
  if (r == 0.0 || r == 1.0 || r == -1.0) return 0.0;
  if (r == 0.5) return 1.0;
  if (r == -0.5) return -1.0;
  if (r > 0.5) return std::sin(kPi * (1.0 - r));
  if (r < -0.5) return -std::sin(kPi * (1.0 + r));
  return std::sin(kPi * r);
}

double cospi(double x) {
  if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
  double r = std::fabs(std::remainder(x, 2.0));  // [0, 1]
  if (r == 0.5) return 0.0;
  if (r == 0.0) return 1.0;
  if (r == 1.0) return -1.0;
  if (r > 0.5) return -std::sin(kPi * (r - 0.5));
  return std::sin(kPi * (0.5 - r));
}

cplx sinpi(cplx z) {
  double x = z.real(), y = z.imag();
  return {sinpi(x) * std::cosh(kPi * y), cospi(x) * std::sinh(kPi * y)};
}

cplx cospi(cplx z) {
  double x = z.real(), y = z.imag();
  return {cospi(x) * std::cosh(kPi * y), -sinpi(x) * std::sinh(kPi * y)};
}

cplx log_sinpi(cplx z) {
  double y = z.imag();
  if (std::fabs(y) < 30.0) return std::log(sinpi(z));
  // sin(pi z) = e^{pi |y|} e^{-+ i pi x} / (+-2i) * (1 - e^{+-2 i pi z})
  double x = z.real();
  cplx corr;
  double re, im;
  if (y > 0) {
    cplx e = std::exp(cplx(-2.0 * kPi * y, 2.0 * kPi * x));
    corr = -e;  // |e| < e^{-188}
    re = kPi * y - std::log(2.0);
    im = -kPi * std::remainder(x, 2.0) + kPi / 2.0;
  } else {
    cplx e = std::exp(cplx(2.0 * kPi * y, -2.0 * kPi * x));
    corr = -e;  // |e| < e^{-188}
    re = -kPi * y - std::log(2.0);
    im = kPi * std::remainder(x, 2.0) - kPi / 2.0;
  }
  cplx out = cplx(re, im) + corr;
  double wrapped = std::remainder(out.imag(), 2.0 * kPi);
  if (wrapped == -kPi) wrapped = kPi;
  return {out.real(), wrapped};
}

bool is_nonpositive_integer(cplx z, long* k) {
  if (z.imag() != 0.0) return false;
  double x = z.real();
  if (x > 0.0 || x != std::floor(x)) return false;
  if (k) *k = static_cast<long>(-x);
  return true;
}

cplx log_gamma(cplx z) {
  if (!finite(z)) throw DomainError("log_gamma: non-finite argument");
  if (is_nonpositive_integer(z)) throw PoleError("log_gamma: pole at non-positive integer");
  if (z.real() < 0.5) {
    double branch = std::copysign(2.0 * kPi, z.imag()) * std::floor(0.5 * z.real() + 0.25);
    return cplx(kLogPi, branch) - log_sinpi(z) - log_gamma(1.0 - z);
  }
  if (z.imag() == 0.0) return std::lgamma(z.real());
  cplx shift = 0.0;
  while (std::abs(z) < 15.0) {
    shift += std::log(z);
    z += 1.0;
  }
  return log_gamma_stirling(z) - shift;
}

cplx gamma(cplx z) { return std::exp(log_gamma(z)); }

cplx rgamma(cplx z) {
  if (is_nonpositive_integer(z)) return 0.0;
  return std::exp(-log_gamma(z));
}

cplx digamma(cplx z) {
  if (!finite(z)) throw DomainError("digamma: non-finite argument");
  if (is_nonpositive_integer(z)) throw PoleError("digamma: pole at non-positive integer");
  if (z.real() < 0.5) {
    return digamma(1.0 - z) - kPi * cospi(z) / sinpi(z);
  }
  cplx shift = 0.0;
  while (std::abs(z) < 15.0) {
    shift += 1.0 / z;
    z += 1.0;
  }
  cplx zinv = 1.0 / z;
  cplx zinv2 = zinv * zinv;
  cplx series = 0.0;
  cplx p = zinv2;
  for (int k = 1; k <= 9; ++k) {
    series += kBernoulli[k - 1] / (2.0 * k) * p;
    p *= zinv2;
  }
  return std::log(z) - 0.5 * zinv - series - shift;
}

cplx zeta(cplx s) {
  if (!finite(s)) throw DomainError("zeta: non-finite argument");
  if (s == cplx(1.0, 0.0)) throw PoleError("zeta: pole at s = 1");
  const int n = 20 + static_cast<int>(std::ceil(std::abs(s)));
  cplx sum = 0.0;
  for (int k = 1; k < n; ++k) sum += std::exp(-s * std::log(static_cast<double>(k)));
  const double logn = std::log(static_cast<double>(n));
  cplx npow = std::exp(-s * logn);  // n^{-s}
  sum += npow * static_cast<double>(n) / (s - 1.0) + 0.5 * npow;
  // Bernoulli corrections B_{2j}/(2j)! (s)_{2j-1} n^{-s-2j+1}
  cplx rising = s;  // (s)_1
  cplx power = npow / static_cast<double>(n);
  double fact = 2.0;  // (2j)!
  for (int j = 1; j <= 12; ++j) {
    sum += kBernoulli[j - 1] / fact * rising * power;
    rising *= (s + (2.0 * j - 1.0)) * (s + 2.0 * j);
    power /= static_cast<double>(n) * n;
    fact *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
  }
  return sum;
}

cplx pochhammer(cplx d, long m) {
  if (m < 0) throw DomainError("pochhammer: negative order");
  if (m <= 256) {
    cplx p = 1.0;
    for (long j = 0; j < m; ++j) p *= d + static_cast<double>(j);
    return p;
  }
  long k;
  if (is_nonpositive_integer(d, &k) && k < m) return 0.0;
  return gamma_ratio_signed({d + static_cast<double>(m)}, {d});
}

cplx gamma_ratio_signed(std::span<const cplx> num, std::span<const cplx> den) {
  cplx log_sum = 0.0;
  double residue_sign = 1.0;
  double log_residue = 0.0;
  long num_poles = 0, den_poles = 0;
  for (const cplx& z : num) {
    long k;
    if (is_nonpositive_integer(z, &k)) {
      ++num_poles;
      if (k % 2) residue_sign = -residue_sign;
      log_residue -= std::lgamma(static_cast<double>(k) + 1.0);
    } else {
      log_sum += log_gamma(z);
    }
  }
  for (const cplx& z : den) {
    long k;
    if (is_nonpositive_integer(z, &k)) {
      ++den_poles;
      if (k % 2) residue_sign = -residue_sign;
      log_residue += std::lgamma(static_cast<double>(k) + 1.0);
    } else {
      log_sum -= log_gamma(z);
    }
  }
  if (num_poles > den_poles) throw PoleError("gamma_ratio_signed: unresolved numerator pole");
  if (den_poles > num_poles) return 0.0;
  return residue_sign * std::exp(log_sum + log_residue);
}

cplx gamma_ratio_signed(std::initializer_list<cplx> num, std::initializer_list<cplx> den) {
  return gamma_ratio_signed(std::span<const cplx>(num.begin(), num.size()),
                            std::span<const cplx>(den.begin(), den.size()));
}

double log_beta(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw DomainError("log_beta: arguments must be positive");
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

double beta(double a, double b) { return std::exp(log_beta(a, b)); }

double log_binomial(double n, double k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

}  // namespace repnorm
