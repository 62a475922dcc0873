#include <cmath>
#include <functional>

#include "repnorm/errors.hpp"
#include "repnorm/fft.hpp"
#include "repnorm/reps.hpp"

namespace repnorm {

namespace {

constexpr double kOracleTol = 1e-9;
constexpr int kDoublings = 3;

size_t next_pow2(double v) {
  size_t n = 1;
  while (static_cast<double>(n) < v) n <<= 1;
  return n;
}

size_t initial_samples(double bandwidth, const CartanCoord& c) {
  // The integrand concentrates on an arc of width ~ (1 - x) near theta = pi.
  return next_pow2(std::max(8.0 * bandwidth + 64.0, 32.0 / c.one_minus_x()));
}

// Runs sample(N) for N, 2N, ... until two consecutive results agree on every
// requested entry to kOracleTol.
template <typename Column>
Column converge(size_t n0, const std::function<Column(size_t)>& sample, const char* what) {
  Column prev = sample(n0);
  size_t n = n0;
  for (int it = 0; it < kDoublings; ++it) {
    n *= 2;
    Column next = sample(n);
    double diff = 0.0;
    for (const auto& [k, v] : next) diff = std::max(diff, std::abs(v - prev.at(k)));
    if (diff <= kOracleTol) return next;
    prev = std::move(next);
  }
  throw ConvergenceError(std::string(what) + ": sample doubling did not converge");
}

}  // namespace

std::map<long, cplx> coef_oracle_principal(double sigma, cplx lambda, long m, const CartanCoord& c,
                                           long n_max) {
  if (n_max < 1) throw DomainError("coef_oracle_principal: n_max must be >= 1");
  if (sigma != 0.0 && sigma != 0.5) throw DomainError("coef_oracle_principal: sigma must be 0 or 1/2");
  if (c.x() == 0.0) {
    std::map<long, cplx> col;
    for (long n = -n_max; n <= n_max; ++n) col[n] = (n == m) ? 1.0 : 0.0;
    return col;
  }
  const double alpha = c.alpha(), beta = c.beta();
  const double md = static_cast<double>(m);
  auto sample = [&](size_t N) {
    std::vector<cplx> f(N);
    for (size_t k = 0; k < N; ++k) {
      double theta = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(N);
      cplx e = std::polar(1.0, theta);
      cplx p = beta * e + alpha;             // beta e^{i theta} + alpha
      cplx q = beta * std::conj(e) + alpha;  // beta e^{-i theta} + alpha
      cplx w = (alpha * e + beta) / p;       // unit modulus
      f[k] = std::exp((lambda + sigma) * std::log(p) + (lambda - sigma) * std::log(q)) *
             std::polar(1.0, -md * std::arg(w));
    }
    std::vector<cplx> g = dft(f, +1);
    std::map<long, cplx> col;
    const long nn = static_cast<long>(N);
    for (long n = -n_max; n <= n_max; ++n) col[n] = g[((n % nn) + nn) % nn] / static_cast<double>(N);
    return col;
  };
  return converge<std::map<long, cplx>>(
      initial_samples(static_cast<double>(n_max + std::labs(m)), c), sample, "coef_oracle_principal");
}

std::map<long, cplx> coef_oracle_complementary(double lambda, long m, const CartanCoord& c,
                                               long n_max) {
  std::map<long, cplx> col = coef_oracle_principal(0.0, lambda, m, c, n_max);
  for (auto& [n, v] : col) v *= complementary_normalization(lambda, n, m);
  return col;
}

std::map<double, cplx> coef_oracle_discrete(int ell, double m, const CartanCoord& c, double n_max) {
  RepSpec r = RepSpec::discrete(ell);
  if (!r.contains(m)) throw DomainError("coef_oracle_discrete: m must lie in ell/2 + N_0");
  const double half = 0.5 * ell;
  const long jm = std::lround(m - half);
  const long jmax = static_cast<long>(std::floor(n_max - half));
  if (jmax < 0) throw DomainError("coef_oracle_discrete: n_max below the lowest index");
  auto norm_of = [&](long j) {
    // leading coefficient of f_{ell/2 + j}
    double s = std::exp(0.5 * log_binomial(static_cast<double>(j + ell - 1), static_cast<double>(j)));
    return (j % 2) ? -s : s;
  };
  if (c.x() == 0.0) {
    std::map<double, cplx> col;
    for (long j = 0; j <= jmax; ++j) col[half + j] = (j == jm) ? 1.0 : 0.0;
    return col;
  }
  const double alpha = c.alpha(), beta = c.beta();
  const double fm_lead = norm_of(jm);
  auto sample = [&](size_t N) {
    std::vector<cplx> f(N);
    for (size_t k = 0; k < N; ++k) {
      double theta = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(N);
      cplx z = std::polar(1.0, theta);
      cplx den = alpha - beta * z;
      cplx zeta = (alpha * z - beta) / den;  // unit modulus
      f[k] = std::pow(den, -ell) * fm_lead * std::polar(1.0, static_cast<double>(jm) * std::arg(zeta));
    }
    std::vector<cplx> g = dft(f, -1);
    std::map<double, cplx> col;
    for (long j = 0; j <= jmax; ++j)
      col[half + j] = g[static_cast<size_t>(j) % N] / (static_cast<double>(N) * norm_of(j));
    return col;
  };
  return converge<std::map<double, cplx>>(initial_samples(static_cast<double>(jmax + jm), c), sample,
                                          "coef_oracle_discrete");
}

}  // namespace repnorm
