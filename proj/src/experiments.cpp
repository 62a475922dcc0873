#include "repnorm/experiments.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>

#include "parallel.hpp"
#include "repnorm/integrals.hpp"
#include "repnorm/structure.hpp"

namespace repnorm {

using nlohmann::json;

namespace {

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || it.key() == a;
    if (!ok) throw ConfigError("unknown field '" + it.key() + "' in " + where);
  }
}

double number(const json& v, const std::string& name) {
  if (!v.is_number()) throw ConfigError("field '" + name + "' must be a number");
  double d = v.get<double>();
  if (!std::isfinite(d)) throw ConfigError("field '" + name + "' must be finite");
  return d;
}

long integer(const json& v, const std::string& name) {
  double d = number(v, name);
  if (d != std::floor(d)) throw ConfigError("field '" + name + "' must be an integer");
  return static_cast<long>(d);
}

}  // namespace

ExperimentConfig parse_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  reject_unknown(doc, {"rep", "m", "n_values", "epsilon", "scan", "tolerances", "output_path", "threads", "seed",
                       "criteria"},
                 "config");
  ExperimentConfig cfg;
  std::optional<RepSpec> rep;
  if (doc.contains("rep")) {
    if (!doc["rep"].is_string()) throw ConfigError("field 'rep' must be a string");
    cfg.rep = doc["rep"].get<std::string>();
    try {
      rep = RepSpec::parse(*cfg.rep);
    } catch (const DomainError& e) {
      throw ConfigError(e.what());
    }
  }
  if (doc.contains("m")) cfg.m = number(doc["m"], "m");
  if (doc.contains("epsilon")) {
    cfg.epsilon = number(doc["epsilon"], "epsilon");
    if (!(cfg.epsilon > 0.0)) throw ConfigError("field 'epsilon' must be > 0");
  }
  if (doc.contains("scan")) {
    const json& s = doc["scan"];
    if (!s.is_object()) throw ConfigError("field 'scan' must be an object");
    reject_unknown(s, {"c_grid", "refine_iters", "t_max_pad"}, "scan");
    if (s.contains("c_grid")) cfg.scan.c_grid = number(s["c_grid"], "scan.c_grid");
    if (s.contains("refine_iters")) cfg.scan.refine_iters = static_cast<int>(integer(s["refine_iters"], "scan.refine_iters"));
    if (s.contains("t_max_pad")) cfg.scan.t_max_pad = number(s["t_max_pad"], "scan.t_max_pad");
    if (!(cfg.scan.c_grid > 0.0) || cfg.scan.refine_iters < 0 || !(cfg.scan.t_max_pad >= 0.0))
      throw ConfigError("scan: need c_grid > 0, refine_iters >= 0, t_max_pad >= 0");
  }
  if (doc.contains("tolerances")) {
    const json& t = doc["tolerances"];
    if (!t.is_object()) throw ConfigError("field 'tolerances' must be an object");
    for (auto it = t.begin(); it != t.end(); ++it) {
      double v = number(it.value(), "tolerances." + it.key());
      if (v < 0.0) throw ConfigError("tolerances must be non-negative");
      cfg.tolerances[it.key()] = v;
    }
  }
  if (doc.contains("output_path")) {
    if (!doc["output_path"].is_string()) throw ConfigError("field 'output_path' must be a string");
    cfg.output_path = doc["output_path"].get<std::string>();
  }
  if (doc.contains("threads")) {
    cfg.threads = static_cast<int>(integer(doc["threads"], "threads"));
    if (cfg.threads < 1) throw ConfigError("field 'threads' must be >= 1");
  }
  if (doc.contains("seed")) {
    long s = integer(doc["seed"], "seed");
    if (s < 0) throw ConfigError("field 'seed' must be non-negative");
    cfg.seed = static_cast<std::uint64_t>(s);
  }
  if (doc.contains("criteria")) {
    const json& c = doc["criteria"];
    if (!c.is_array()) throw ConfigError("field 'criteria' must be an array");
    for (const json& id : c) {
      if (id.is_string())
        cfg.criteria.push_back(id.get<std::string>());
      else
        cfg.criteria.push_back(std::to_string(integer(id, "criteria")));
    }
  }
  if (doc.contains("n_values")) {
    const json& nv = doc["n_values"];
    if (nv.is_array()) {
      for (const json& v : nv) cfg.n_values.push_back(number(v, "n_values"));
    } else if (nv.is_object()) {
      reject_unknown(nv, {"geometric"}, "n_values");
      if (!nv.contains("geometric") || !nv["geometric"].is_object())
        throw ConfigError("n_values: expected an array or {\"geometric\": {...}}");
      const json& g = nv["geometric"];
      reject_unknown(g, {"start", "stop", "factor"}, "n_values.geometric");
      if (!g.contains("start") || !g.contains("stop")) throw ConfigError("n_values.geometric needs start and stop");
      if (!rep) throw ConfigError("n_values.geometric requires 'rep'");
      double factor = g.contains("factor") ? number(g["factor"], "factor") : 2.0;
      try {
        cfg.n_values = geometric_indices(*rep, number(g["start"], "start"), number(g["stop"], "stop"), factor);
      } catch (const DomainError& e) {
        throw ConfigError(e.what());
      }
    } else {
      throw ConfigError("field 'n_values' must be an array or object");
    }
  }
  if (rep) {
    double m = cfg.m.value_or(rep->default_m());
    if (!rep->contains(m)) throw ConfigError(fmt::format("m = {} is not a basis index of {}", m, *cfg.rep));
    for (double n : cfg.n_values)
      if (!rep->contains(n)) throw ConfigError(fmt::format("n = {} is not a basis index of {}", n, *cfg.rep));
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

int resolve_threads(int configured) {
  if (const char* env = std::getenv("REPNORM_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 1024) return static_cast<int>(v);
    throw ConfigError(std::string("REPNORM_THREADS must be a positive integer, got '") + env + "'");
  }
  return std::max(1, configured);
}

std::string format_number(double v) { return fmt::format("{:.17g}", v); }

ScanOutcome run_norm_scan(const ExperimentConfig& cfg, std::ostream& csv) {
  if (!cfg.rep) throw ConfigError("norm-scan requires 'rep'");
  const RepSpec rep = RepSpec::parse(*cfg.rep);
  const double m = cfg.m.value_or(rep.default_m());
  std::vector<double> ns = cfg.n_values;
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());

  struct Row {
    std::optional<NormSample> sample;
    ErrorKind kind = ErrorKind::Convergence;
    std::string reason;
  };
  std::vector<Row> rows(ns.size());
  detail::parallel_for(ns.size(), resolve_threads(cfg.threads), [&](size_t i) {
    try {
      rows[i].sample = pmin_scan(rep, m, ns[i], cfg.scan);
    } catch (const Error& e) {
      rows[i].kind = e.kind();
      rows[i].reason = e.what();
    }
  });

  csv << "n,pmin,x_argmax,pmax_proxy,q_s_half,err_est\n";
  ScanOutcome out;
  for (size_t i = 0; i < ns.size(); ++i) {
    const Row& r = rows[i];
    if (r.sample) {
      const NormSample& s = *r.sample;
      csv << format_number(ns[i]) << ',' << format_number(s.value) << ',' << format_number(s.x_argmax) << ','
          << format_number(1.0 / s.value) << ',' << format_number(sobolev_multiplier(static_cast<double>(s.kappa), 0.5))
          << ',' << format_number(s.err_est) << '\n';
      ++out.rows;
    } else {
      std::string reason = r.reason;
      std::replace(reason.begin(), reason.end(), '\n', ' ');
      csv << "# ERROR " << format_number(ns[i]) << ' ' << reason << '\n';
      if (!out.failure) out.failure = r.kind;
    }
  }
  return out;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream ss(line);
  while (std::getline(ss, cur, ',')) out.push_back(cur);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

FitResult fit_csv(std::istream& csv, const std::string& column, bool with_log) {
  std::string line;
  std::vector<std::string> header;
  std::vector<double> ns, vs;
  size_t n_col = 0, v_col = 0;
  while (std::getline(csv, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto fields = split_csv_line(line);
    if (header.empty()) {
      header = fields;
      auto find = [&](const std::string& name) {
        auto it = std::find(header.begin(), header.end(), name);
        if (it == header.end()) throw ConfigError("CSV has no column '" + name + "'");
        return static_cast<size_t>(it - header.begin());
      };
      n_col = find("n");
      v_col = find(column);
      continue;
    }
    if (fields.size() != header.size()) throw ConfigError("CSV row has the wrong number of fields");
    auto parse = [&](const std::string& s) {
      char* end = nullptr;
      double v = std::strtod(s.c_str(), &end);
      if (s.empty() || *end != '\0') throw ConfigError("CSV field is not a number: '" + s + "'");
      return v;
    };
    ns.push_back(parse(fields[n_col]));
    vs.push_back(parse(fields[v_col]));
  }
  if (header.empty()) throw ConfigError("CSV has no header");
  return fit_exponent(ns, vs, with_log);
}

std::string fit_result_json(const FitResult& f) {
  return fmt::format(
      "{{\"alpha\":{},\"beta\":{},\"amplitude\":{},\"residual_rms\":{},\"n_min\":{},\"n_max\":{}}}",
      format_number(f.alpha), format_number(f.beta), format_number(f.amplitude), format_number(f.residual_rms),
      format_number(f.n_min), format_number(f.n_max));
}

void write_integral_table(const RepSpec& r, double m, const std::vector<double>& ns_in, double epsilon, double tol,
                          std::ostream& out) {
  const BetaMeasure beta = beta_measure(epsilon);
  if (r.kind != RepKind::Discrete && m != 0.0)
    throw ConfigError("integral: principal and complementary integrals use m = 0");
  if (!r.contains(m)) throw ConfigError("integral: m is not a basis index");
  std::vector<double> ns = ns_in;
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  for (double n : ns) {
    if (!r.contains(n)) throw ConfigError(fmt::format("integral: n = {} is not a basis index", n));
    if (r.kind != RepKind::Discrete && n < 0) throw ConfigError("integral: n must be >= 0");
  }
  out << "n,quadrature_re,quadrature_im,reference_re,reference_im,reference_method,rel_dev\n";
  for (double n : ns) {
    IntegralValue quad, ref;
    const long ni = std::lround(n);
    switch (r.kind) {
      case RepKind::Principal:
        quad = I_principal_quadrature(r.sigma, r.lambda, ni, beta, tol);
        if (r.sigma == 0.5 && r.lambda == cplx(-0.5, 0.0))
          ref = I_principal_easy_closed_form(ni, beta);
        else
          ref = I_principal_series(r.sigma, r.lambda, ni, beta);
        break;
      case RepKind::Complementary:
        quad = integrate_coefficient(r, n, 0.0, beta, tol);
        ref = I_complementary(r.lambda.real(), ni, beta, tol);
        break;
      case RepKind::Discrete:
        quad = integrate_coefficient(r, n, m, beta, tol);
        ref = I_discrete(r.ell, m, n, beta);
        break;
    }
    double scale = std::abs(ref.value);
    double dev = scale > 0.0 ? std::abs(quad.value - ref.value) / scale : std::abs(quad.value);
    out << format_number(n) << ',' << format_number(quad.value.real()) << ',' << format_number(quad.value.imag())
        << ',' << format_number(ref.value.real()) << ',' << format_number(ref.value.imag()) << ','
        << integral_method_name(ref.method) << ',' << format_number(dev) << '\n';
  }
}

void write_constants_table(const std::vector<std::string>& families, std::optional<double> c, double R,
                           std::ostream& out) {
  if (c && !(*c > 0.0)) throw ConfigError("constants: c must be > 0");
  if (!(R >= 0.0)) throw ConfigError("constants: R must be >= 0");
  out << "family,c_g,rank_k,mps_bound_R0,threshold_principal_mps,threshold_generalized_verma,"
         "threshold_other_discrete,lorentz_ktype_exponent,lorentz_sobolev_threshold";
  if (c) out << ",mps_bound";
  out << '\n';
  for (const std::string& f : families) {
    LieType t;
    try {
      t = LieType::parse(f);
    } catch (const DomainError& e) {
      throw ConfigError(e.what());
    }
    Rational cg = structural_constant(t);
    Rational bound0 = Rational(2) * cg + Rational(t.rank_k());
    std::string th[3];
    if (t.family == LieFamily::SO1n || t.family == LieFamily::SU1n) {
      th[0] = domination_threshold(t, SeriesClass::PrincipalMPS).str();
      th[1] = domination_threshold(t, SeriesClass::GeneralizedVerma).str();
      th[2] = domination_threshold(t, SeriesClass::OtherDiscrete).str();
    }
    std::string lor[2];
    if (t.family == LieFamily::SO1n) {
      auto p = lorentz_sobolev_bound(t.n);
      lor[0] = p.first.str();
      lor[1] = p.second.str();
    }
    out << t.name() << ',' << cg.str() << ',' << t.rank_k() << ',' << bound0.str() << ',' << th[0] << ',' << th[1]
        << ',' << th[2] << ',' << lor[0] << ',' << lor[1];
    if (c) out << ',' << format_number(mps_gap_bound(t, *c, R));
    out << '\n';
  }
}

}  // namespace repnorm
