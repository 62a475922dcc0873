#pragma once

#include <functional>
#include <span>

#include "repnorm/specfun.hpp"

namespace repnorm {

struct QuadResult {
  cplx value;
  double err_est = 0.0;
  long evaluations = 0;
  int intervals = 0;
};

// Globally adaptive 21-point Gauss-Kronrod on [a, b]. The initial partition
// includes any breakpoints inside (a, b). Converged when the summed error
// estimate is below max(abs_tol, rel_tol * |I|); otherwise ConvergenceError
// once max_intervals is reached.
QuadResult integrate_adaptive(const std::function<cplx(double)>& f, double a, double b,
                              double abs_tol, double rel_tol, int max_intervals = 5000,
                              std::span<const double> breakpoints = {});

}  // namespace repnorm
