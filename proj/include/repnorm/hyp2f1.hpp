#pragma once

#include "repnorm/specfun.hpp"

namespace repnorm {

enum class Hyp2F1Method { Terminating, GaussSeries, Boundary, EulerIntegral };

const char* hyp2f1_method_name(Hyp2F1Method m);

struct Hyp2F1Result {
  cplx value;
  double err_est = 0.0;  // absolute
  long terms = 0;
  Hyp2F1Method method = Hyp2F1Method::GaussSeries;
};

// Gauss 2F1(a, b; c; z). Terminating when a or b is a non-positive integer
// (then any real z is accepted); otherwise the power series on 0 <= z < 1.
// Stops when a rigorous geometric tail bound drops below tol * |partial sum|.
// PoleError when c is a pole not preceded by termination, DomainError for
// z outside the admissible range, ConvergenceError past max_terms.
Hyp2F1Result hyp2f1(cplx a, cplx b, cplx c, double z, double tol = 1e-15,
                    long max_terms = 1000000);

// The same function near z = 1, given w = 1 - z in (0, 1), via the connection
// to the point 1. Needs c - a - b either non-integer or exactly 0, and a, b
// not non-positive integers in the logarithmic case; DomainError otherwise.
Hyp2F1Result hyp2f1_near_one(cplx a, cplx b, cplx c, double w, double tol = 1e-15,
                             long max_terms = 100000);

// hyp2f1_near_one with the Gamma-function connection constants computed once.
class Hyp2F1NearOne {
 public:
  Hyp2F1NearOne(cplx a, cplx b, cplx c);
  Hyp2F1Result operator()(double w, double tol = 1e-15, long max_terms = 100000) const;
  bool logarithmic() const { return log_case_; }

 private:
  cplx a_, b_, c_, s_;
  bool log_case_ = false;
  cplx A_, B_;      // non-integer c - a - b
  cplx pre_, h0_;   // logarithmic case
};

// Reference value from the Euler integral; needs Re c > Re b > 0 and z < 1.
Hyp2F1Result hyp2f1_euler_oracle(cplx a, cplx b, cplx c, double z, double rel_tol = 1e-12);

}  // namespace repnorm
