#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <optional>

#include "repnorm/errors.hpp"
#include "repnorm/reps.hpp"

namespace repnorm {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

long as_long_index(double n, const char* what) {
  if (!std::isfinite(n) || n != std::floor(n)) throw DomainError(std::string(what) + ": index must be an integer");
  return static_cast<long>(n);
}

}  // namespace

double complementary_normalization(double lambda, long n, long m) {
  if (!(lambda > -0.5 && lambda < 0.0))
    throw DomainError("complementary series: lambda must lie in (-1/2, 0)");
  // H(k) = H(-k) by reflection, so only positive gamma arguments occur.
  const double nd = static_cast<double>(std::labs(n)), md = static_cast<double>(std::labs(m));
  cplx ratio = gamma_ratio_signed({1.0 + lambda + nd, md - lambda}, {nd - lambda, 1.0 + lambda + md});
  if (!(ratio.real() > 0.0) || std::fabs(ratio.imag()) > 1e-12 * std::fabs(ratio.real()))
    throw NormalizationError("complementary series: non-positive invariant form ratio at n=" +
                             std::to_string(n) + ", m=" + std::to_string(m));
  return std::sqrt(ratio.real());
}

cplx principal_constant_n0(double sigma, cplx lambda, long n) {
  if (n < 0) throw DomainError("principal_constant_n0: n must be >= 0");
  const double nd = static_cast<double>(n);
  cplx g = gamma_ratio_signed({lambda - sigma + 1.0, nd + sigma - lambda}, {nd + 1.0});
  double sign = (n % 2) ? -1.0 : 1.0;
  return sign * sinpi(sigma - lambda) / kPi * g;
}

struct CoefficientEvaluator::Impl {
  RepSpec rep;
  double n = 0.0, m = 0.0;
  CoefOptions opts;

  // Principal / complementary:
  //   value = exp(log_pre + (d/2) log x - lambda log(1-x)) * 2F1(a, b; c; x)
  long ni = 0, mi = 0, d = 0;
  bool vanishes = false;
  cplx log_pre;
  cplx lambda;
  double sigma = 0.0;
  double norm = 1.0;  // complementary normalisation
  cplx a, b, c;
  double param_scale = 0.0;
  std::optional<Hyp2F1NearOne> near_one;

  // Discrete: value = sign * sum_k (-1)^k exp(log_j + log_c[k] + e_x[k] log x + e_w[k] log(1-x))
  long jn = 0, jm = 0;
  double log_j = 0.0, sign = 1.0;
  std::vector<double> log_c;

  void init_principal() {
    ni = as_long_index(n, "principal coefficient");
    mi = as_long_index(m, "principal coefficient");
    d = ni - mi;
    const long ad = d >= 0 ? d : -d;
    const cplx start = d >= 0 ? lambda - static_cast<double>(ni) - sigma + 1.0
                              : lambda + static_cast<double>(ni) + sigma + 1.0;
    log_pre = -std::lgamma(static_cast<double>(ad) + 1.0);
    for (long j = 0; j < ad; ++j) {
      cplx f = start + static_cast<double>(j);
      if (f == 0.0) {
        vanishes = true;
        break;
      }
      log_pre += std::log(f);
    }
    if (d >= 0) {
      a = -lambda - static_cast<double>(mi) - sigma;
      b = -lambda + static_cast<double>(ni) + sigma;
    } else {
      a = -lambda - static_cast<double>(ni) - sigma;
      b = -lambda + static_cast<double>(mi) + sigma;
    }
    c = static_cast<double>(ad) + 1.0;
    param_scale = std::max({std::abs(a), std::abs(b), std::abs(c - a), std::abs(c - b), 1.0});
    if (!is_nonpositive_integer(a) && !is_nonpositive_integer(b)) {
      try {
        near_one.emplace(a, b, c);
      } catch (const Error&) {
        near_one.reset();
      }
    }
  }

  void init_discrete() {
    const int ell = rep.ell;
    if (!rep.contains(n) || !rep.contains(m))
      throw DomainError("discrete coefficient: indices must lie in ell/2 + N_0");
    jn = std::lround(n - 0.5 * ell);
    jm = std::lround(m - 0.5 * ell);
    sign = (jn % 2) ? -1.0 : 1.0;
    log_j = -std::lgamma(static_cast<double>(ell)) +
            0.5 * (std::lgamma(n + 0.5 * ell) + std::lgamma(m + 0.5 * ell) -
                   std::lgamma(static_cast<double>(jn) + 1.0) -
                   std::lgamma(static_cast<double>(jm) + 1.0));
    const long kmax = std::min(jn, jm);
    log_c.resize(kmax + 1);
    for (long k = 0; k <= kmax; ++k) {
      double kd = static_cast<double>(k);
      log_c[k] = std::lgamma(kd + 1.0) + log_binomial(static_cast<double>(jm), kd) +
                 log_binomial(static_cast<double>(jn), kd) -
                 (std::lgamma(ell + kd) - std::lgamma(static_cast<double>(ell)));
    }
  }

  CoefValue eval_discrete(const CartanCoord& cc) const {
    if (cc.x() == 0.0) return {jn == jm ? 1.0 : 0.0, CoefMethod::ClosedForm, 0.0, Hyp2F1Method::Terminating};
    const double lx = std::log(cc.x()), lw = std::log(cc.one_minus_x());
    const double ex0 = 0.5 * static_cast<double>(jn + jm), ew0 = 0.5 * rep.ell;
    double sum = 0.0, comp = 0.0, abs_sum = 0.0;
    for (size_t k = 0; k < log_c.size(); ++k) {
      double kd = static_cast<double>(k);
      double term = std::exp(log_j + log_c[k] + (ex0 - kd) * lx + (ew0 + kd) * lw);
      if (k % 2) term = -term;
      double t = sum + term;
      comp += std::fabs(sum) >= std::fabs(term) ? (sum - t) + term : (term - t) + sum;
      sum = t;
      abs_sum += std::fabs(term);
    }
    double value = sign * (sum + comp);
    double err = 4.0 * kEps * (static_cast<double>(log_c.size()) + 1.0) * abs_sum;
    return {value, CoefMethod::ClosedForm, err, Hyp2F1Method::Terminating};
  }

  CoefValue eval_oracle(const CartanCoord& cc) const {
    const long nmax = std::max(std::labs(ni), 1L);
    std::map<long, cplx> col = coef_oracle_principal(sigma, lambda, mi, cc, nmax);
    cplx v = col.at(ni) * norm;
    return {v, CoefMethod::Oracle, 1e-9 * std::max(1.0, norm), Hyp2F1Method::EulerIntegral};
  }

  CoefValue eval_principal(const CartanCoord& cc) const {
    const double x = cc.x(), w = cc.one_minus_x();
    if (x == 0.0) return {ni == mi ? 1.0 : 0.0, CoefMethod::ClosedForm, 0.0, Hyp2F1Method::Terminating};
    if (vanishes) return {0.0, CoefMethod::ClosedForm, 0.0, Hyp2F1Method::Terminating};
    const double ad = static_cast<double>(d >= 0 ? d : -d);
    const cplx scale = norm * std::exp(log_pre + 0.5 * ad * std::log(x) - lambda * std::log(w));
    Hyp2F1Result f;
    try {
      if (x > opts.x_cut && near_one && param_scale * w <= opts.boundary_tau)
        f = (*near_one)(w, opts.tol);
      else
        f = hyp2f1(a, b, c, x, opts.tol);
    } catch (const ConvergenceError&) {
      if (!opts.oracle_fallback) throw;
      return eval_oracle(cc);
    }
    cplx value = scale * f.value;
    double err = std::abs(scale) * f.err_est + 1e-14 * std::abs(value);
    return {value, CoefMethod::ClosedForm, err, f.method};
  }
};

CoefficientEvaluator::CoefficientEvaluator(const RepSpec& r, double n, double m, CoefOptions opts)
    : impl_(std::make_unique<Impl>()) {
  impl_->rep = r;
  impl_->n = n;
  impl_->m = m;
  impl_->opts = opts;
  switch (r.kind) {
    case RepKind::Principal:
      impl_->lambda = r.lambda;
      impl_->sigma = r.sigma;
      impl_->init_principal();
      break;
    case RepKind::Complementary:
      impl_->lambda = r.lambda;
      impl_->sigma = 0.0;
      impl_->init_principal();
      impl_->norm = complementary_normalization(r.lambda.real(), impl_->ni, impl_->mi);
      break;
    case RepKind::Discrete:
      impl_->init_discrete();
      break;
  }
}

CoefficientEvaluator::~CoefficientEvaluator() = default;
CoefficientEvaluator::CoefficientEvaluator(CoefficientEvaluator&&) noexcept = default;
CoefficientEvaluator& CoefficientEvaluator::operator=(CoefficientEvaluator&&) noexcept = default;

CoefValue CoefficientEvaluator::operator()(const CartanCoord& c) const {
  if (impl_->rep.kind == RepKind::Discrete) return impl_->eval_discrete(c);
  return impl_->eval_principal(c);
}

const RepSpec& CoefficientEvaluator::rep() const { return impl_->rep; }

CoefValue coef_principal(double sigma, cplx lambda, long n, long m, const CartanCoord& c,
                         CoefOptions opts) {
  return CoefficientEvaluator(RepSpec::principal(sigma, lambda), static_cast<double>(n),
                              static_cast<double>(m), opts)(c);
}

CoefValue coef_complementary(double lambda, long n, long m, const CartanCoord& c, CoefOptions opts) {
  return CoefficientEvaluator(RepSpec::complementary(lambda), static_cast<double>(n),
                              static_cast<double>(m), opts)(c);
}

CoefValue coef_discrete(int ell, double n, double m, const CartanCoord& c) {
  return CoefficientEvaluator(RepSpec::discrete(ell), n, m)(c);
}

CoefValue coefficient(const RepSpec& r, double n, double m, const CartanCoord& c, CoefOptions opts) {
  return CoefficientEvaluator(r, n, m, opts)(c);
}

}  // namespace repnorm
