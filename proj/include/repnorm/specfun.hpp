#pragma once

#include <complex>
#include <initializer_list>
#include <span>

namespace repnorm {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

// Exact-reduction sin(pi x) and cos(pi x); exact zeros at the integers.
double sinpi(double x);
double cospi(double x);
cplx sinpi(cplx z);
cplx cospi(cplx z);
// Principal log of sin(pi z), stable for large |Im z|.
cplx log_sinpi(cplx z);

// True when z is 0, -1, -2, ...; stores -z in *k.
bool is_nonpositive_integer(cplx z, long* k = nullptr);

// Principal branch of log Gamma. PoleError at non-positive integers.
cplx log_gamma(cplx z);
cplx gamma(cplx z);
// 1/Gamma(z); zero at the poles of Gamma.
cplx rgamma(cplx z);
cplx digamma(cplx z);
// Riemann zeta by Euler-Maclaurin summation. PoleError at s = 1.
cplx zeta(cplx s);

// Rising factorial (d)_m; DomainError for m < 0.
cplx pochhammer(cplx d, long m);

// prod Gamma(num) / prod Gamma(den). Matching poles on both sides are
// resolved by their residues at a common shift; surplus denominator poles
// give 0, surplus numerator poles throw PoleError.
cplx gamma_ratio_signed(std::span<const cplx> num, std::span<const cplx> den);
cplx gamma_ratio_signed(std::initializer_list<cplx> num,
                        std::initializer_list<cplx> den);

// log B(a, b) for a, b > 0.
double log_beta(double a, double b);
double beta(double a, double b);
double log_binomial(double n, double k);

}  // namespace repnorm
