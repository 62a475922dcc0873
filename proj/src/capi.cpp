#include <fmt/format.h>

#include <cmath>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

#include "repnorm/acceptance.hpp"
#include "repnorm/experiments.hpp"
#include "repnorm/group.hpp"
#include "repnorm/repnorm.h"
#include "repnorm/reps.hpp"

struct repnorm_rep {
  repnorm::RepSpec spec;
};

namespace {

thread_local std::string g_last_error;

template <class F>
repnorm_status guarded(F&& body) {
  try {
    g_last_error.clear();
    body();
    return REPNORM_OK;
  } catch (const repnorm::Error& e) {
    g_last_error = e.what();
    return static_cast<repnorm_status>(e.kind());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
  } catch (const std::exception& e) {
    g_last_error = e.what();
  } catch (...) {
    g_last_error = "unknown error";
  }
  return REPNORM_E_INTERNAL;
}

void require(const void* p, const char* what) {
  if (!p) throw repnorm::PreconditionError(std::string(what) + " must not be null");
}

// Writes text to path when non-empty, otherwise to the callback.
void emit(const std::string& text, const std::string& path, repnorm_write_fn write, void* user) {
  if (!path.empty()) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw repnorm::IoError("cannot open '" + path + "' for writing");
    out << text;
    if (!out.flush()) throw repnorm::IoError("write to '" + path + "' failed");
    return;
  }
  if (write) write(text.data(), text.size(), user);
}

}  // namespace

extern "C" {

const char* repnorm_last_error(void) { return g_last_error.c_str(); }

const char* repnorm_status_name(repnorm_status s) {
  if (s == REPNORM_OK) return "ok";
  if (s == REPNORM_E_INTERNAL) return "internal";
  if (s >= REPNORM_E_DOMAIN && s <= REPNORM_E_IO) return repnorm::error_kind_name(static_cast<repnorm::ErrorKind>(s));
  return "unknown";
}

repnorm_status repnorm_rep_parse(const char* descriptor, repnorm_rep** out) {
  return guarded([&] {
    require(descriptor, "descriptor");
    require(out, "out");
    *out = nullptr;
    *out = new repnorm_rep{repnorm::RepSpec::parse(descriptor)};
  });
}

void repnorm_rep_free(repnorm_rep* rep) { delete rep; }

repnorm_status repnorm_rep_k_character(const repnorm_rep* rep, double n, long* out) {
  return guarded([&] {
    require(rep, "rep");
    require(out, "out");
    *out = rep->spec.k_character(n);
  });
}

repnorm_status repnorm_rep_default_m(const repnorm_rep* rep, double* out) {
  return guarded([&] {
    require(rep, "rep");
    require(out, "out");
    *out = rep->spec.default_m();
  });
}

int repnorm_rep_unitary(const repnorm_rep* rep) { return rep && rep->spec.unitary() ? 1 : 0; }

repnorm_status repnorm_coef_eval(const repnorm_rep* rep, double n, double m, double coord, repnorm_coordinate kind,
                                 int use_oracle, repnorm_coef* out) {
  return guarded([&] {
    using namespace repnorm;
    require(rep, "rep");
    require(out, "out");
    const RepSpec& r = rep->spec;
    if (!r.contains(n) || !r.contains(m))
      throw DomainError(fmt::format("indices n = {}, m = {} must lie in the basis of {}", n, m, r.descriptor()));
    const CartanCoord c = kind == REPNORM_COORD_T ? CartanCoord::from_t(coord) : CartanCoord::from_x(coord);
    if (use_oracle) {
      cplx v;
      if (r.kind == RepKind::Discrete) {
        v = coef_oracle_discrete(r.ell, m, c, n).at(n);
      } else {
        const long ni = std::lround(n), mi = std::lround(m);
        const long n_max = std::labs(ni);
        v = r.kind == RepKind::Principal ? coef_oracle_principal(r.sigma, r.lambda, mi, c, n_max).at(ni)
                                         : coef_oracle_complementary(r.lambda.real(), mi, c, n_max).at(ni);
      }
      *out = {v.real(), v.imag(), 0.0, REPNORM_ORACLE, "oracle"};
      return;
    }
    const CoefValue v = coefficient(r, n, m, c);
    *out = {v.value.real(), v.value.imag(), v.err_est,
            v.method == CoefMethod::Oracle ? REPNORM_ORACLE : REPNORM_CLOSED_FORM,
            v.method == CoefMethod::Oracle ? "oracle" : hyp2f1_method_name(v.route)};
  });
}

repnorm_status repnorm_pmin_scan(const repnorm_rep* rep, double m, double n, repnorm_norm_sample* out) {
  return guarded([&] {
    require(rep, "rep");
    require(out, "out");
    const repnorm::NormSample s = repnorm::pmin_scan(rep->spec, m, n);
    *out = {s.n, s.kappa, s.value, s.x_argmax, s.t_argmax, s.err_est};
  });
}

repnorm_status repnorm_fit_exponent(const double* n, const double* values, size_t count, int with_log,
                                    repnorm_fit* out) {
  return guarded([&] {
    require(out, "out");
    if (count > 0) {
      require(n, "n");
      require(values, "values");
    }
    const repnorm::FitResult f =
        repnorm::fit_exponent(std::vector<double>(n, n + count), std::vector<double>(values, values + count), with_log != 0);
    *out = {f.alpha, f.beta, f.amplitude, f.residual_rms, f.n_min, f.n_max};
  });
}

repnorm_status repnorm_norm_scan(const char* config_json, repnorm_write_fn write, void* user) {
  repnorm_status partial = REPNORM_OK;
  std::string partial_msg;
  repnorm_status st = guarded([&] {
    require(config_json, "config_json");
    const repnorm::ExperimentConfig cfg = repnorm::parse_config(config_json);
    std::ostringstream csv;
    const repnorm::ScanOutcome res = repnorm::run_norm_scan(cfg, csv);
    emit(csv.str(), cfg.output_path, write, user);
    if (res.failure) {
      partial = static_cast<repnorm_status>(*res.failure);
      partial_msg = "norm-scan: some rows failed, see the # ERROR trailer";
    }
  });
  if (st == REPNORM_OK && partial != REPNORM_OK) {
    g_last_error = partial_msg;
    return partial;
  }
  return st;
}

repnorm_status repnorm_fit_csv(const char* csv_text, const char* column, int with_log, repnorm_write_fn write,
                               void* user) {
  return guarded([&] {
    require(csv_text, "csv_text");
    require(column, "column");
    std::istringstream in(csv_text);
    const repnorm::FitResult f = repnorm::fit_csv(in, column, with_log != 0);
    emit(repnorm::fit_result_json(f) + "\n", "", write, user);
  });
}

repnorm_status repnorm_integral_table(const repnorm_rep* rep, double m, const double* ns, size_t count,
                                      double epsilon, double tol, repnorm_write_fn write, void* user) {
  return guarded([&] {
    require(rep, "rep");
    if (count > 0) require(ns, "ns");
    std::ostringstream out;
    repnorm::write_integral_table(rep->spec, m, std::vector<double>(ns, ns + count), epsilon, tol, out);
    emit(out.str(), "", write, user);
  });
}

repnorm_status repnorm_constants_table(const char* const* families, size_t count, int has_c, double c, double R,
                                       repnorm_write_fn write, void* user) {
  return guarded([&] {
    if (count > 0) require(families, "families");
    std::vector<std::string> fams;
    for (size_t i = 0; i < count; ++i) {
      require(families[i], "family");
      fams.emplace_back(families[i]);
    }
    std::ostringstream out;
    repnorm::write_constants_table(fams, has_c ? std::optional<double>(c) : std::nullopt, R, out);
    emit(out.str(), "", write, user);
  });
}

repnorm_status repnorm_acceptance(const char* config_json, repnorm_write_fn progress, void* user, int* all_pass) {
  return guarded([&] {
    require(config_json, "config_json");
    require(all_pass, "all_pass");
    *all_pass = 0;
    repnorm::ExperimentConfig cfg = repnorm::parse_config(config_json);
    if (cfg.output_path.empty()) cfg.output_path = "acceptance_report.json";
    const auto records = repnorm::run_acceptance(cfg, [&](const repnorm::ReportRecord& r) {
      const std::string line =
          fmt::format("{} criterion {:>2} ({} ms): {}\n", r.pass ? "PASS" : "FAIL", r.criterion_id, r.runtime_ms, r.observed);
      if (progress) progress(line.data(), line.size(), user);
    });
    emit(repnorm::report_json(records), cfg.output_path, nullptr, nullptr);
    bool ok = true;
    for (const auto& r : records) ok = ok && r.pass;
    *all_pass = ok ? 1 : 0;
  });
}

}  // extern "C"
