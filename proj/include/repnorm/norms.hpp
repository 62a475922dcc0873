#pragma once

#include <map>
#include <vector>

#include "repnorm/reps.hpp"

namespace repnorm {

struct ScanConfig {
  double c_grid = 0.1;     // t-grid spacing is c_grid / (kappa + 1)
  int refine_iters = 40;   // golden-section iterations per candidate
  double t_max_pad = 0.0;  // added to T_max = 6 + log(1 + kappa)
  int candidates = 8;
  CoefOptions coef;
};

struct NormSample {
  double n = 0.0;      // basis index
  long kappa = 0;      // K-character of n
  double value = 0.0;
  double x_argmax = 0.0;
  double t_argmax = 0.0;
  CoefMethod method = CoefMethod::ClosedForm;
  double err_est = 0.0;
};

struct FitResult {
  double alpha = 0.0;
  double beta = 0.0;
  double amplitude = 0.0;
  double residual_rms = 0.0;
  double n_min = 0.0, n_max = 0.0;
  size_t points = 0;
};

// (1 + kappa^2)^{s/2} for a K-type with character kappa.
double sobolev_multiplier(double kappa, double s);
// sqrt(sum |a_k|^2 (1 + kappa^2)^s), keys are K-characters.
double sobolev_norm(const std::map<long, cplx>& coeffs, double s);

// sup over x in [0,1) of |<pi(a_x) f_m, f_n>|.
NormSample pmin_scan(const RepSpec& r, double m, double n, const ScanConfig& cfg = {});
// Scans for several n; threads <= 1 runs serially. Results follow the order of ns.
std::vector<NormSample> pmin_scan_batch(const RepSpec& r, double m, const std::vector<double>& ns,
                                        const ScanConfig& cfg = {}, int threads = 1);
double pmax_lower_proxy(const RepSpec& r, double m, double n, const ScanConfig& cfg = {});

// Least squares of log v = log A + alpha log(1+n) + beta log log(e+n).
FitResult fit_exponent(const std::vector<double>& n, const std::vector<double>& values, bool with_log);
// Fit against the K-characters of the samples.
FitResult fit_exponent(const std::vector<NormSample>& samples, bool with_log);

// Slope of log(p/q) against log (1 + kappa^2)^{1/2}, clamped at 0.
double distance_estimate(const std::vector<NormSample>& p, const std::vector<NormSample>& q);

struct GapEstimate {
  double gap = 0.0;
  std::vector<NormSample> pmin;
  std::vector<NormSample> pmax_proxy;
};
GapEstimate sobolev_gap_from_samples(const std::vector<NormSample>& pmin);
GapEstimate sobolev_gap_estimate(const RepSpec& r, double m, const std::vector<double>& ns,
                                 const ScanConfig& cfg = {}, int threads = 1);

// Geometric list start, 2 start, ... <= stop, shifted into the basis of r.
std::vector<double> geometric_indices(const RepSpec& r, double start, double stop, double factor = 2.0);

}  // namespace repnorm
