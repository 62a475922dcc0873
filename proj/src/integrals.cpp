#include "repnorm/integrals.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "repnorm/errors.hpp"
#include "repnorm/quadrature.hpp"

namespace repnorm {

namespace {

void require_strip(cplx lambda, const char* what) {
  if (!(lambda.real() > -1.0 && lambda.real() < 0.0))
    throw DomainError(std::string(what) + ": requires -1 < Re lambda < 0");
}

// log(1 + u) accurate for small |u|.
cplx log1p(cplx u) {
  double re = 0.5 * std::log1p(2.0 * u.real() + std::norm(u));
  return {re, std::atan2(u.imag(), 1.0 + u.real())};
}

// log Gamma(z) - [(z - 1/2) log z - z + log(2 pi)/2] for large |z|.
cplx stirling_tail(cplx z) {
  static constexpr double b[6] = {1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0, -691.0 / 2730.0};
  cplx zinv = 1.0 / z, zinv2 = zinv * zinv, p = zinv, acc = 0.0;
  for (int k = 1; k <= 6; ++k) {
    acc += b[k - 1] / (2.0 * k * (2.0 * k - 1.0)) * p;
    p *= zinv2;
  }
  return acc;
}

cplx expm1(cplx u) {
  double er = std::expm1(u.real());
  double s = std::sin(0.5 * u.imag());
  return {er * std::cos(u.imag()) - 2.0 * s * s, (er + 1.0) * std::sin(u.imag())};
}

}  // namespace

BetaMeasure beta_measure(double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw DomainError("beta_measure: epsilon must be > 0");
  return {epsilon, epsilon};
}

const char* integral_method_name(IntegralMethod m) {
  switch (m) {
    case IntegralMethod::Quadrature: return "quadrature";
    case IntegralMethod::Series: return "series";
    case IntegralMethod::ClosedForm: return "closed_form";
    case IntegralMethod::FiniteSum: return "finite_sum";
  }
  return "unknown";
}

IntegralValue integrate_coefficient(const RepSpec& r, double n, double m, const BetaMeasure& beta,
                                    double tol) {
  if (!(beta.epsilon > 0.0)) throw DomainError("integrate_coefficient: invalid measure");
  const double eps = beta.epsilon;
  const CoefficientEvaluator ev(r, n, m);
  // x = 1 - u^{1/eps}, d beta = (c/eps) du
  auto f = [&](double u) -> cplx {
    double w = std::exp(std::log(u) / eps);
    if (!(w > 1e-300)) return 0.0;
    if (w >= 1.0) w = 1.0;
    return ev(CartanCoord::from_one_minus_x(w)).value;
  };
  const double kd = std::fabs(static_cast<double>(r.k_character(n))) + 1.0;
  std::vector<double> breaks;
  for (double s : {0.1, 1.0, 10.0, 100.0}) {
    double w = s / kd;
    if (w < 1.0) breaks.push_back(std::pow(w, eps));
  }
  QuadResult q = integrate_adaptive(f, 0.0, 1.0, tol, tol, 20000, breaks);
  const double scale = beta.c / eps;
  return {scale * q.value, IntegralMethod::Quadrature, scale * q.err_est};
}

IntegralValue I_principal_quadrature(double sigma, cplx lambda, long n, const BetaMeasure& beta,
                                     double tol) {
  require_strip(lambda, "I_principal_quadrature");
  return integrate_coefficient(RepSpec::principal(sigma, lambda), static_cast<double>(n), 0.0, beta, tol);
}

IntegralValue J_series(double sigma, cplx lambda, long n, double epsilon, double tol) {
  require_strip(lambda, "J_series");
  if (sigma != 0.0 && sigma != 0.5) throw DomainError("J_series: sigma must be 0 or 1/2");
  if (n < 0) throw DomainError("J_series: n must be >= 0");
  if (lambda + sigma == cplx(0.0)) throw DomainError("J_series: requires lambda + sigma != 0");
  if (!(epsilon > 0.0)) throw DomainError("J_series: epsilon must be > 0");
  const double nd = static_cast<double>(n);
  const cplx a = -lambda - sigma, b = nd + sigma - lambda, q = epsilon - lambda;
  const double h = 0.5 * nd + 1.0;

  // log of the k-th term as an analytic function of real k >= 2000, with the
  // k log k parts of the six log-Gamma terms cancelled analytically.
  const cplx log_fixed = log_gamma(q) + std::lgamma(nd + 1.0) - log_gamma(a) - log_gamma(b);
  const cplx shifts[6] = {a, b, h, nd + 1.0, 1.0, h + q};
  const double signs[6] = {1.0, 1.0, 1.0, -1.0, -1.0, -1.0};
  const cplx exponent = a + b - nd - 2.0 - q;  // T(k) ~ k^exponent
  auto log_term = [&](double k) {
    cplx acc = log_fixed + exponent * std::log(k);
    for (int i = 0; i < 6; ++i) {
      const cplx z = shifts[i];
      acc += signs[i] * ((z + k - 0.5) * log1p(z / k) - z + stirling_tail(z + k));
    }
    return acc;
  };

  long terminate_at = -1;
  long ka;
  if (is_nonpositive_integer(a, &ka)) terminate_at = ka;
  long kb;
  if (is_nonpositive_integer(b, &kb)) terminate_at = terminate_at < 0 ? kb : std::min(terminate_at, kb);

  const long K = terminate_at >= 0 ? terminate_at + 1 : std::max<long>(2000, 20 * n);
  if (K > 1000000) throw ConvergenceError("J_series: term cap exceeded");
  cplx term = gamma_ratio_signed({h, q}, {h + q});
  cplx sum = 0.0, comp = 0.0;
  double abs_sum = 0.0;
  for (long k = 0; k < K; ++k) {
    cplx y = term - comp;
    cplx t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    // the k-th term carries about k rounding errors from the recurrence
    abs_sum += std::abs(term) * (static_cast<double>(k) + 1.0);
    double kd = static_cast<double>(k);
    term *= (a + kd) * (b + kd) / ((nd + 1.0 + kd) * (kd + 1.0)) * ((h + kd) / (h + kd + q));
  }
  double err = 4.0 * 2.2e-16 * abs_sum;
  if (terminate_at >= 0) return {sum, IntegralMethod::Series, err};

  // Tail sum_{k>=K} T(k) = int_K^inf T + T(K)/2 - T'(K)/12 + ...
  const double Kd = static_cast<double>(K);
  const cplx TK = std::exp(log_term(Kd));
  const cplx dlog = digamma(a + Kd) + digamma(b + Kd) + digamma(h + Kd) - digamma(nd + 1.0 + Kd) -
                    digamma(cplx(Kd + 1.0)) - digamma(h + Kd + q);
  const double p = lambda.real() + 1.0 + epsilon;  // T(k) ~ k^{-p-1}
  // k = K / s, s = v^{1/p}: the integrand is bounded on v in (0, 1]
  auto g = [&](double v) -> cplx {
    if (v < 1e-100) return 0.0;
    double logs = std::log(v) / p;
    double k = Kd * std::exp(-logs);
    if (!std::isfinite(k)) return 0.0;
    return std::exp(log_term(k) + std::log(Kd) - 2.0 * logs + (1.0 / p - 1.0) * std::log(v)) / p;
  };
  QuadResult tail = integrate_adaptive(g, 0.0, 1.0, 0.0, 0.1 * tol, 20000);
  cplx total = sum + tail.value + 0.5 * TK - TK * dlog / 12.0;
  // next Euler-Maclaurin term is O(T(K) / K^3)
  err += tail.err_est + std::abs(TK) * (p + 1.0) * (p + 2.0) * (p + 3.0) / (720.0 * Kd * Kd * Kd);
  if (err > tol * std::abs(total) * 100.0 && err > 1e-300)
    throw ConvergenceError("J_series: tail estimate above tolerance");
  return {total, IntegralMethod::Series, err};
}

IntegralValue I_principal_series(double sigma, cplx lambda, long n, const BetaMeasure& beta, double tol) {
  IntegralValue j = J_series(sigma, lambda, n, beta.epsilon, tol);
  cplx pre = beta.c * principal_constant_n0(sigma, lambda, n);
  return {pre * j.value, IntegralMethod::Series, std::abs(pre) * j.err_est};
}

IntegralValue I_principal_easy_closed_form(long n, const BetaMeasure& beta) {
  if (n < 0) throw DomainError("I_principal_easy_closed_form: n must be >= 0");
  double v = beta.c * repnorm::beta(0.5 * static_cast<double>(n) + 1.0, 0.5 + beta.epsilon);
  if (n % 2) v = -v;
  return {v, IntegralMethod::ClosedForm, 1e-14 * std::fabs(v)};
}

IntegralValue I_complementary(double lambda, long n, const BetaMeasure& beta, double tol) {
  double norm = complementary_normalization(lambda, n, 0);
  IntegralValue i = I_principal_quadrature(0.0, lambda, n, beta, tol / std::max(norm, 1.0));
  return {norm * i.value, IntegralMethod::Quadrature, norm * i.err_est};
}

IntegralValue I_discrete(int ell, double m, double n, const BetaMeasure& beta) {
  RepSpec r = RepSpec::discrete(ell);
  if (!r.contains(m) || !r.contains(n)) throw DomainError("I_discrete: indices must lie in ell/2 + N_0");
  if (!(beta.epsilon > 0.0)) throw DomainError("I_discrete: invalid measure");
  const double half = 0.5 * ell;
  const long jn = std::lround(n - half), jm = std::lround(m - half);
  const double log_j = -std::lgamma(static_cast<double>(ell)) +
                       0.5 * (std::lgamma(n + half) + std::lgamma(m + half) -
                              std::lgamma(jn + 1.0) - std::lgamma(jm + 1.0));
  const double ex = 0.5 * static_cast<double>(jn + jm);
  double sum = 0.0, abs_sum = 0.0;
  for (long k = 0; k <= std::min(jn, jm); ++k) {
    double kd = static_cast<double>(k);
    double lc = std::lgamma(kd + 1.0) + log_binomial(static_cast<double>(jm), kd) +
                log_binomial(static_cast<double>(jn), kd) -
                (std::lgamma(ell + kd) - std::lgamma(static_cast<double>(ell)));
    double t = std::exp(log_j + lc + log_beta(ex - kd + 1.0, half + kd + beta.epsilon));
    sum += (k % 2) ? -t : t;
    abs_sum += t;
  }
  double v = beta.c * ((jn % 2) ? -sum : sum);
  return {v, IntegralMethod::FiniteSum, 1e-14 * beta.c * abs_sum};
}

FaulhaberResult faulhaber_sum(cplx c, long n) {
  if (n < 1) throw DomainError("faulhaber_sum: n must be >= 1");
  if (c == cplx(1.0, 0.0)) throw DomainError("faulhaber_sum: c = 1 is excluded");
  cplx sum = 0.0, comp = 0.0;
  for (long k = n; k >= 1; --k) {
    cplx term = std::exp(-c * std::log(static_cast<double>(k)));
    cplx y = term - comp;
    cplx t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  const double logn = std::log(static_cast<double>(n));
  cplx approx = std::exp((1.0 - c) * logn) / (1.0 - c) + zeta(c) + 0.5 * std::exp(-c * logn);
  return {sum, approx, sum - approx};
}

double stirling_ratio_check(double z, cplx alpha) {
  if (!(z > std::abs(alpha) + 1.0)) throw DomainError("stirling_ratio_check: requires z > |alpha| + 1");
  long k;
  if (alpha.imag() == 0.0 && alpha.real() >= 0.0 && alpha.real() <= 64.0 &&
      is_nonpositive_integer(-alpha, &k)) {
    double ratio = 1.0;
    for (long j = 0; j < k; ++j) ratio *= (z + static_cast<double>(j)) / z;
    return std::fabs(ratio - 1.0) * z;
  }
  cplx u = log_gamma(z + alpha) - log_gamma(z) - alpha * std::log(z);
  return std::abs(expm1(u)) * z;
}

}  // namespace repnorm
