#pragma once

#include "repnorm/reps.hpp"

namespace repnorm {

// d beta = c (1-x)^{eps-1} dx on [0,1), c = eps.
struct BetaMeasure {
  double epsilon = 0.0;
  double c = 0.0;
};
BetaMeasure beta_measure(double epsilon);

enum class IntegralMethod { Quadrature, Series, ClosedForm, FiniteSum };
const char* integral_method_name(IntegralMethod m);

struct IntegralValue {
  cplx value;
  IntegralMethod method = IntegralMethod::Quadrature;
  double err_est = 0.0;
};

// c * int_0^1 <pi(a_x) f_m, f_n> (1-x)^{eps-1} dx for any representation,
// after the substitution u = (1-x)^eps.
IntegralValue integrate_coefficient(const RepSpec& r, double n, double m, const BetaMeasure& beta,
                                    double tol = 1e-10);

// I_{n,eps}(sigma, lambda) with m = 0; needs -1 < Re lambda < 0.
IntegralValue I_principal_quadrature(double sigma, cplx lambda, long n, const BetaMeasure& beta,
                                     double tol = 1e-10);
// sum_k (a)_k (b)_k / ((n+1)_k k!) B(n/2+k+1, eps-lambda), a = -lambda-sigma,
// b = n+sigma-lambda: direct terms followed by an Euler-Maclaurin tail.
IntegralValue J_series(double sigma, cplx lambda, long n, double epsilon, double tol = 1e-12);
// c * principal_constant_n0 * J_series.
IntegralValue I_principal_series(double sigma, cplx lambda, long n, const BetaMeasure& beta,
                                 double tol = 1e-12);
// sigma = 1/2, lambda = -1/2: eps (-1)^n B(n/2+1, 1/2+eps).
IntegralValue I_principal_easy_closed_form(long n, const BetaMeasure& beta);

// C_lambda(n,0) * I_{n,eps}(0, lambda).
IntegralValue I_complementary(double lambda, long n, const BetaMeasure& beta, double tol = 1e-10);

// Exact finite sum for c * int <pi(a_x) f_m, f_n> d beta.
IntegralValue I_discrete(int ell, double m, double n, const BetaMeasure& beta);

struct FaulhaberResult {
  cplx exact;
  cplx approx;
  cplx difference;  // exact - approx
};
// sum_{k<=n} k^{-c} against n^{1-c}/(1-c) + zeta(c) + n^{-c}/2.
FaulhaberResult faulhaber_sum(cplx c, long n);

// |Gamma(z+alpha)/Gamma(z) z^{-alpha} - 1| * z.
double stirling_ratio_check(double z, cplx alpha);

}  // namespace repnorm
