#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "repnorm/repnorm.h"

namespace {

void to_stdout(const char* data, size_t len, void*) {
  std::fwrite(data, 1, len, stdout);
  std::fflush(stdout);
}

int exit_code(repnorm_status s) {
  switch (s) {
    case REPNORM_OK:
      return 0;
    case REPNORM_E_CONVERGENCE:
    case REPNORM_E_SCAN:
      return 3;
    case REPNORM_E_FIT:
      return 4;
    case REPNORM_E_INTERNAL:
      return 5;
    default:
      return 2;
  }
}

int fail(repnorm_status s) {
  std::fprintf(stderr, "repnorm: %s error: %s\n", repnorm_status_name(s), repnorm_last_error());
  return exit_code(s);
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct RepHandle {
  repnorm_rep* p = nullptr;
  ~RepHandle() { repnorm_rep_free(p); }
};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matrix coefficients, norm scans and integral checks for SU(1,1) representations"};
  app.require_subcommand(1);

  // coef
  auto* coef = app.add_subcommand("coef", "Evaluate one matrix coefficient");
  std::string c_rep;
  std::optional<double> c_m, c_x, c_t;
  double c_n = 0.0;
  bool c_oracle = false;
  coef->add_option("--rep", c_rep, "Representation descriptor")->required();
  coef->add_option("--m", c_m, "Column index (default: the scan vector)");
  coef->add_option("--n", c_n, "Row index")->required();
  auto* ox = coef->add_option("--x", c_x, "Cartan coordinate x in [0,1)");
  auto* ot = coef->add_option("--t", c_t, "Cartan coordinate t >= 0");
  ox->excludes(ot);
  coef->add_flag("--oracle", c_oracle, "Use the quadrature oracle");

  // norm-scan
  auto* scan = app.add_subcommand("norm-scan", "Minimal-norm scan over the configured n values");
  std::string s_config;
  scan->add_option("--config", s_config, "JSON experiment config")->required();

  // fit
  auto* fit = app.add_subcommand("fit", "Fit a power law to a CSV column");
  std::string f_csv, f_column = "pmin";
  bool f_log = false;
  fit->add_option("--csv", f_csv, "CSV file")->required();
  fit->add_option("--column", f_column, "Column to fit");
  fit->add_flag("--with-log", f_log, "Include the log log term");

  // integral
  auto* integ = app.add_subcommand("integral", "Quadrature against reference values of the beta-measure pairing");
  std::string i_rep;
  std::optional<double> i_m;
  double i_eps = 0.25, i_tol = 1e-10;
  std::vector<double> i_n;
  integ->add_option("--rep", i_rep, "Representation descriptor")->required();
  integ->add_option("--m", i_m, "Column index (discrete series only)");
  integ->add_option("--eps", i_eps, "Measure exponent epsilon")->required();
  integ->add_option("--n", i_n, "Row indices")->delimiter(',');
  integ->add_option("--tol", i_tol, "Quadrature tolerance");

  // constants
  auto* cons = app.add_subcommand("constants", "Structural constants and thresholds");
  std::vector<std::string> k_families;
  std::optional<double> k_c;
  double k_R = 0.0;
  cons->add_option("--family", k_families, "so1n:<n>, su1n:<n>, sp1n:<n>, f4, sl:<n>")->required()->delimiter(',');
  cons->add_option("--c", k_c, "Weight exponent c > 0 for the numeric bound");
  cons->add_option("--R", k_R, "Radius R >= 0 for the numeric bound");

  // acceptance
  auto* acc = app.add_subcommand("acceptance", "Run the acceptance criteria and write a JSON report");
  std::string a_config;
  acc->add_option("--config", a_config, "JSON config (tolerances, seed, threads, output_path)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (*coef) {
    RepHandle rep;
    if (auto s = repnorm_rep_parse(c_rep.c_str(), &rep.p)) return fail(s);
    double m = 0.0;
    if (c_m)
      m = *c_m;
    else if (auto s = repnorm_rep_default_m(rep.p, &m))
      return fail(s);
    if (!c_x && !c_t) {
      std::fprintf(stderr, "repnorm: coef needs --x or --t\n");
      return 2;
    }
    repnorm_coef v{};
    auto s = repnorm_coef_eval(rep.p, c_n, m, c_x ? *c_x : *c_t, c_x ? REPNORM_COORD_X : REPNORM_COORD_T, c_oracle,
                               &v);
    if (s) return fail(s);
    std::printf("re      %s\nim      %s\nabs     %s\nmethod  %s\nroute   %s\nerr_est %s\n", num(v.re).c_str(),
                num(v.im).c_str(), num(std::hypot(v.re, v.im)).c_str(),
                v.method == REPNORM_ORACLE ? "oracle" : "closed_form", v.route, num(v.err_est).c_str());
    return 0;
  }

  if (*scan) {
    auto text = read_file(s_config);
    if (!text) {
      std::fprintf(stderr, "repnorm: cannot read config '%s'\n", s_config.c_str());
      return 2;
    }
    auto s = repnorm_norm_scan(text->c_str(), to_stdout, nullptr);
    return s ? fail(s) : 0;
  }

  if (*fit) {
    auto text = read_file(f_csv);
    if (!text) {
      std::fprintf(stderr, "repnorm: cannot read CSV '%s'\n", f_csv.c_str());
      return 2;
    }
    auto s = repnorm_fit_csv(text->c_str(), f_column.c_str(), f_log, to_stdout, nullptr);
    return s ? fail(s) : 0;
  }

  if (*integ) {
    RepHandle rep;
    if (auto s = repnorm_rep_parse(i_rep.c_str(), &rep.p)) return fail(s);
    double m = 0.0;
    if (i_m)
      m = *i_m;
    else if (auto s = repnorm_rep_default_m(rep.p, &m))
      return fail(s);
    auto s = repnorm_integral_table(rep.p, m, i_n.data(), i_n.size(), i_eps, i_tol, to_stdout, nullptr);
    return s ? fail(s) : 0;
  }

  if (*cons) {
    std::vector<const char*> fams;
    for (const auto& f : k_families) fams.push_back(f.c_str());
    auto s = repnorm_constants_table(fams.data(), fams.size(), k_c.has_value(), k_c.value_or(0.0), k_R, to_stdout,
                                     nullptr);
    return s ? fail(s) : 0;
  }

  if (*acc) {
    std::string text = "{}";
    if (!a_config.empty()) {
      auto t = read_file(a_config);
      if (!t) {
        std::fprintf(stderr, "repnorm: cannot read config '%s'\n", a_config.c_str());
        return 2;
      }
      text = *t;
    }
    int all_pass = 0;
    auto s = repnorm_acceptance(text.c_str(), to_stdout, nullptr, &all_pass);
    if (s) return fail(s);
    std::printf("%s\n", all_pass ? "all criteria passed" : "some criteria failed");
    return all_pass ? 0 : 1;
  }
  return 2;
}
