#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "repnorm/errors.hpp"
#include "repnorm/norms.hpp"

namespace repnorm {

// JSON experiment description. Unknown fields are rejected.
struct ExperimentConfig {
  std::optional<std::string> rep;
  std::optional<double> m;
  std::vector<double> n_values;
  double epsilon = 0.25;
  ScanConfig scan;
  std::map<std::string, double> tolerances;
  std::string output_path;
  int threads = 1;
  std::uint64_t seed = 20240601;
  std::vector<std::string> criteria;  // acceptance subset; empty runs all
};

ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config(const std::string& path);

// REPNORM_THREADS overrides the configured thread count when set.
int resolve_threads(int configured);

// 17 significant digits.
std::string format_number(double v);

struct ScanOutcome {
  size_t rows = 0;
  std::optional<ErrorKind> failure;  // first failing row, if any
};

// CSV "n,pmin,x_argmax,pmax_proxy,q_s_half,err_est", rows sorted by n; a
// failed row is replaced by a trailer line "# ERROR <n> <reason>".
ScanOutcome run_norm_scan(const ExperimentConfig& cfg, std::ostream& csv);

// Fits column against the "n" column of a CSV produced by run_norm_scan.
FitResult fit_csv(std::istream& csv, const std::string& column, bool with_log);
std::string fit_result_json(const FitResult& f);

// Per-n quadrature value against an independent reference (closed form,
// series or finite sum, depending on the representation).
void write_integral_table(const RepSpec& r, double m, const std::vector<double>& ns, double epsilon,
                          double tol, std::ostream& out);

// Structural constants for family descriptors such as "so1n:3", "sl:4", "f4".
void write_constants_table(const std::vector<std::string>& families, std::optional<double> c, double R,
                           std::ostream& out);

}  // namespace repnorm
