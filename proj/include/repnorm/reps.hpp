#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "repnorm/group.hpp"
#include "repnorm/hyp2f1.hpp"
#include "repnorm/specfun.hpp"

namespace repnorm {

enum class RepKind { Principal, Complementary, Discrete };

// Member of the unitary dual of SU(1,1) (principal series also admits
// non-unitary lambda). Basis indices are integers for the principal and
// complementary series and lie in ell/2 + N_0 for the discrete series, so
// they are carried as doubles.
struct RepSpec {
  RepKind kind = RepKind::Principal;
  double sigma = 0.0;  // Principal: 0 or 1/2
  cplx lambda = 0.0;   // Principal (complex), Complementary (real)
  int ell = 0;         // Discrete

  static RepSpec principal(double sigma, cplx lambda);
  static RepSpec complementary(double lambda);
  static RepSpec discrete(int ell);
  // "principal:<sigma>:<lambda>", "complementary:<lambda>", "discrete:<ell>";
  // lambda accepts forms like -0.5, -0.5+1i, -0.5-0.7i.
  static RepSpec parse(const std::string& descriptor);
  std::string descriptor() const;

  bool unitary() const;
  bool irreducible() const;
  bool contains(double n) const;
  // K-character of basis index n; DomainError outside the index set.
  long k_character(double n) const;
  // Fixed generating vector of the minimal-norm scans.
  double default_m() const;
};

std::vector<long> k_spectrum(const RepSpec& r, long limit);

enum class CoefMethod { ClosedForm, Oracle };
const char* coef_method_name(CoefMethod m);

struct CoefValue {
  cplx value;
  CoefMethod method = CoefMethod::ClosedForm;
  double err_est = 0.0;
  Hyp2F1Method route = Hyp2F1Method::GaussSeries;
};

struct CoefOptions {
  // Gauss series below x_cut. Above it, the connection expansion at x = 1
  // is used while (largest parameter) * (1 - x) <= boundary_tau, else the
  // Gauss series again; the circle oracle is the fallback on failure.
  double x_cut = 0.98;
  double boundary_tau = 6.0;
  double tol = 1e-15;
  bool oracle_fallback = true;
};

// Normalisation constant of the complementary series, sqrt(H(n)/H(m)) with
// H(k) = Gamma(1+lambda+k)/Gamma(k-lambda).
double complementary_normalization(double lambda, long n, long m);

// Constant of the m = 0 principal coefficient,
// (-1)^n sin(pi(sigma-lambda))/pi * Gamma(lambda-sigma+1) Gamma(n+sigma-lambda) / n!.
cplx principal_constant_n0(double sigma, cplx lambda, long n);

// <pi(a_x) f_m, f_n> for one (rep, n, m) pair with all x-independent
// quantities precomputed; evaluation is thread-safe.
class CoefficientEvaluator {
 public:
  CoefficientEvaluator(const RepSpec& r, double n, double m, CoefOptions opts = {});
  ~CoefficientEvaluator();
  CoefficientEvaluator(CoefficientEvaluator&&) noexcept;
  CoefficientEvaluator& operator=(CoefficientEvaluator&&) noexcept;

  CoefValue operator()(const CartanCoord& c) const;
  const RepSpec& rep() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

CoefValue coef_principal(double sigma, cplx lambda, long n, long m, const CartanCoord& c,
                         CoefOptions opts = {});
CoefValue coef_complementary(double lambda, long n, long m, const CartanCoord& c,
                             CoefOptions opts = {});
CoefValue coef_discrete(int ell, double n, double m, const CartanCoord& c);
CoefValue coefficient(const RepSpec& r, double n, double m, const CartanCoord& c,
                      CoefOptions opts = {});

// Circle-quadrature column {n -> <pi(a_x) f_m, f_n>} for |n| <= n_max.
std::map<long, cplx> coef_oracle_principal(double sigma, cplx lambda, long m,
                                           const CartanCoord& c, long n_max);
// Same for the complementary series (normalised basis).
std::map<long, cplx> coef_oracle_complementary(double lambda, long m, const CartanCoord& c,
                                               long n_max);
// Disc-model column {n -> <pi(a_x) f_m, f_n>} for ell/2 <= n <= n_max.
std::map<double, cplx> coef_oracle_discrete(int ell, double m, const CartanCoord& c,
                                            double n_max);

}  // namespace repnorm
