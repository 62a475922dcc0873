#include "repnorm/norms.hpp"

#include <Eigen/Dense>
#include <fmt/format.h>

#include <algorithm>
#include <cmath>

#include "parallel.hpp"
#include "repnorm/errors.hpp"

namespace repnorm {

double sobolev_multiplier(double kappa, double s) {
  if (!std::isfinite(kappa) || !std::isfinite(s)) throw DomainError("sobolev_multiplier: non-finite input");
  return std::pow(1.0 + kappa * kappa, 0.5 * s);
}

double sobolev_norm(const std::map<long, cplx>& coeffs, double s) {
  double sum = 0.0;
  for (const auto& [kappa, a] : coeffs) {
    double k = static_cast<double>(kappa);
    sum += std::norm(a) * std::pow(1.0 + k * k, s);
  }
  return std::sqrt(sum);
}

namespace {

struct Probe {
  double t;
  double value;
  CoefMethod method;
  double err;
};

}  // namespace

NormSample pmin_scan(const RepSpec& r, double m, double n, const ScanConfig& cfg) {
  if (!(cfg.c_grid > 0.0) || cfg.refine_iters < 0 || cfg.candidates < 1 || !(cfg.t_max_pad >= 0.0))
    throw DomainError("pmin_scan: invalid scan configuration");
  if (!r.contains(m) || !r.contains(n)) throw DomainError("pmin_scan: index outside the basis");
  const long kappa = std::labs(r.k_character(n));
  const double kd = static_cast<double>(kappa);
  const CoefficientEvaluator ev(r, n, m, cfg.coef);

  const double dt = cfg.c_grid / (kd + 1.0);
  const double t_max = 6.0 + std::log1p(kd) + cfg.t_max_pad;
  const long steps = static_cast<long>(std::ceil(t_max / dt));

  auto probe = [&](double t) {
    t = std::clamp(t, 0.0, t_max);
    CoefValue v = ev(CartanCoord::from_t(t));
    return Probe{t, std::abs(v.value), v.method, v.err_est};
  };

  std::vector<double> grid(steps + 1);
  Probe best_grid{0.0, -1.0, CoefMethod::ClosedForm, 0.0};
  std::vector<Probe> probes(steps + 1);
  for (long i = 0; i <= steps; ++i) {
    probes[i] = probe(std::min(t_max, i * dt));
    grid[i] = probes[i].value;
    if (grid[i] > best_grid.value) best_grid = probes[i];
  }

  std::vector<long> peaks;
  for (long i = 0; i <= steps; ++i) {
    bool left = i == 0 || grid[i] >= grid[i - 1];
    bool right = i == steps || grid[i] >= grid[i + 1];
    if (left && right) peaks.push_back(i);
  }
  std::sort(peaks.begin(), peaks.end(), [&](long p, long q) { return grid[p] > grid[q]; });
  if (peaks.size() > static_cast<size_t>(cfg.candidates)) peaks.resize(cfg.candidates);

  std::vector<double> centers;
  for (long i : peaks) centers.push_back(std::min(t_max, i * dt));
  if (kappa > 0) {
    for (double u : {0.5, 1.0, 2.0}) {
      // Dirac point x = 1 - 1/(1 + kappa/u)
      double w = 1.0 / (1.0 + kd / u);
      double t = std::acosh(1.0 / std::sqrt(w));
      if (t <= t_max) centers.push_back(t);
    }
  }

  Probe best = best_grid;
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  for (double center : centers) {
    Probe seed = probe(center);
    if (seed.value > best.value) best = seed;
    double lo = std::max(0.0, center - dt), hi = std::min(t_max, center + dt);
    Probe pa = probe(hi - g * (hi - lo)), pb = probe(lo + g * (hi - lo));
    for (int it = 0; it < cfg.refine_iters; ++it) {
      if (pa.value > pb.value) {
        hi = pb.t;
        pb = pa;
        pa = probe(hi - g * (hi - lo));
      } else {
        lo = pa.t;
        pa = pb;
        pb = probe(lo + g * (hi - lo));
      }
    }
    for (const Probe& p : {pa, pb})
      if (p.value > best.value) best = p;
  }

  if (best.t >= t_max - 0.5 * dt && kappa > 0)
    throw ScanError(fmt::format("pmin_scan: maximum at the grid boundary t = {} for n = {}", t_max, n));

  NormSample s;
  s.n = n;
  s.kappa = kappa;
  s.value = best.value;
  s.t_argmax = best.t;
  s.x_argmax = CartanCoord::from_t(best.t).x();
  s.method = best.method;
  s.err_est = std::fabs(best.value - best_grid.value) + best.err;
  if (!(s.value > 0.0)) throw ScanError(fmt::format("pmin_scan: vanishing coefficient for n = {}", n));
  return s;
}

std::vector<NormSample> pmin_scan_batch(const RepSpec& r, double m, const std::vector<double>& ns,
                                        const ScanConfig& cfg, int threads) {
  std::vector<NormSample> out(ns.size());
  detail::parallel_for(ns.size(), threads, [&](size_t i) { out[i] = pmin_scan(r, m, ns[i], cfg); });
  return out;
}

double pmax_lower_proxy(const RepSpec& r, double m, double n, const ScanConfig& cfg) {
  if (!r.unitary()) throw DomainError("pmax_lower_proxy: requires a unitary representation");
  return 1.0 / pmin_scan(r, m, n, cfg).value;
}

FitResult fit_exponent(const std::vector<double>& n, const std::vector<double>& values, bool with_log) {
  if (n.size() != values.size()) throw FitError("fit_exponent: size mismatch");
  const size_t k = n.size();
  if (k < 5) throw FitError("fit_exponent: at least 5 samples are required");
  const int cols = with_log ? 3 : 2;
  Eigen::MatrixXd X(k, cols);
  Eigen::VectorXd y(k);
  for (size_t i = 0; i < k; ++i) {
    if (!(n[i] >= 2.0) || !(values[i] > 0.0) || !std::isfinite(values[i]))
      throw FitError("fit_exponent: samples need n >= 2 and positive finite values");
    X(i, 0) = 1.0;
    X(i, 1) = std::log1p(n[i]);
    if (with_log) X(i, 2) = std::log(std::log(std::exp(1.0) + n[i]));
    y(i) = std::log(values[i]);
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
  qr.setThreshold(1e-10);
  if (qr.rank() < cols) throw FitError("fit_exponent: degenerate design matrix");
  Eigen::VectorXd coef = qr.solve(y);
  Eigen::VectorXd resid = y - X * coef;
  FitResult f;
  f.amplitude = std::exp(coef(0));
  f.alpha = coef(1);
  f.beta = with_log ? coef(2) : 0.0;
  f.residual_rms = std::sqrt(resid.squaredNorm() / static_cast<double>(k));
  f.n_min = *std::min_element(n.begin(), n.end());
  f.n_max = *std::max_element(n.begin(), n.end());
  f.points = k;
  return f;
}

FitResult fit_exponent(const std::vector<NormSample>& samples, bool with_log) {
  std::vector<double> n, v;
  for (const auto& s : samples) {
    n.push_back(static_cast<double>(s.kappa));
    v.push_back(s.value);
  }
  return fit_exponent(n, v, with_log);
}

double distance_estimate(const std::vector<NormSample>& p, const std::vector<NormSample>& q) {
  std::map<long, double> qmap;
  for (const auto& s : q) qmap[s.kappa] = s.value;
  std::vector<double> xs, ys;
  for (const auto& s : p) {
    auto it = qmap.find(s.kappa);
    if (it == qmap.end()) continue;
    if (!(s.value > 0.0) || !(it->second > 0.0)) throw FitError("distance_estimate: non-positive sample");
    double kd = static_cast<double>(s.kappa);
    xs.push_back(0.5 * std::log1p(kd * kd));
    ys.push_back(std::log(s.value / it->second));
  }
  if (xs.size() < 5) throw FitError("distance_estimate: fewer than 5 common K-types");
  Eigen::MatrixXd X(xs.size(), 2);
  Eigen::VectorXd y(xs.size());
  for (size_t i = 0; i < xs.size(); ++i) {
    X(i, 0) = 1.0;
    X(i, 1) = xs[i];
    y(i) = ys[i];
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
  qr.setThreshold(1e-10);
  if (qr.rank() < 2) throw FitError("distance_estimate: degenerate K-type set");
  return std::max(0.0, static_cast<double>(qr.solve(y)(1)));
}

GapEstimate sobolev_gap_from_samples(const std::vector<NormSample>& pmin) {
  GapEstimate g;
  g.pmin = pmin;
  for (NormSample s : pmin) {
    s.value = 1.0 / s.value;
    g.pmax_proxy.push_back(s);
  }
  g.gap = distance_estimate(g.pmax_proxy, g.pmin);
  return g;
}

GapEstimate sobolev_gap_estimate(const RepSpec& r, double m, const std::vector<double>& ns,
                                 const ScanConfig& cfg, int threads) {
  if (!r.unitary()) throw DomainError("sobolev_gap_estimate: requires a unitary representation");
  return sobolev_gap_from_samples(pmin_scan_batch(r, m, ns, cfg, threads));
}

std::vector<double> geometric_indices(const RepSpec& r, double start, double stop, double factor) {
  if (!(start > 0.0) || !(factor > 1.0)) throw DomainError("geometric_indices: need start > 0, factor > 1");
  std::vector<double> out;
  for (double v = start; v <= stop; v *= factor) {
    double idx = r.contains(v) ? v : v + 0.5;
    if (!r.contains(idx)) throw DomainError(fmt::format("geometric_indices: {} not in the basis", v));
    out.push_back(idx);
  }
  return out;
}

}  // namespace repnorm
