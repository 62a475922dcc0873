#include <fmt/format.h>

#include <cerrno>
#include <cmath>
#include <cstdlib>

#include "repnorm/errors.hpp"
#include "repnorm/reps.hpp"

namespace repnorm {

namespace {

bool is_integer(double v) { return std::isfinite(v) && v == std::floor(v); }

double parse_real(const std::string& s, const std::string& what) {
  if (s.empty()) throw DomainError("cannot parse " + what + ": empty");
  const char* begin = s.c_str();
  char* end = nullptr;
  errno = 0;
  double v = std::strtod(begin, &end);
  if (end != begin + s.size() || errno == ERANGE || !std::isfinite(v))
    throw DomainError("cannot parse " + what + ": '" + s + "'");
  return v;
}

cplx parse_complex(std::string s) {
  if (s.empty()) throw DomainError("cannot parse lambda: empty");
  const char last = s.back();
  if (last != 'i' && last != 'j') return {parse_real(s, "lambda"), 0.0};
  s.pop_back();
  size_t split = std::string::npos;
  for (size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  auto imag_part = [](const std::string& t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return parse_real(t, "lambda imaginary part");
  };
  if (split == std::string::npos) return {0.0, imag_part(s)};
  return {parse_real(s.substr(0, split), "lambda real part"), imag_part(s.substr(split))};
}

std::string format_complex(cplx z) {
  if (z.imag() == 0.0) return fmt::format("{}", z.real());
  return fmt::format("{}{}{}i", z.real(), z.imag() < 0 ? "-" : "+", std::fabs(z.imag()));
}

}  // namespace

RepSpec RepSpec::principal(double sigma, cplx lambda) {
  if (sigma != 0.0 && sigma != 0.5) throw DomainError("principal series: sigma must be 0 or 1/2");
  if (!std::isfinite(lambda.real()) || !std::isfinite(lambda.imag()))
    throw DomainError("principal series: lambda must be finite");
  RepSpec r;
  r.kind = RepKind::Principal;
  r.sigma = sigma;
  r.lambda = lambda;
  return r;
}

RepSpec RepSpec::complementary(double lambda) {
  if (!(lambda > -0.5 && lambda < 0.0))
    throw DomainError("complementary series: lambda must lie in (-1/2, 0)");
  RepSpec r;
  r.kind = RepKind::Complementary;
  r.lambda = lambda;
  return r;
}

RepSpec RepSpec::discrete(int ell) {
  if (ell < 2) throw DomainError("discrete series: ell must be an integer >= 2");
  RepSpec r;
  r.kind = RepKind::Discrete;
  r.ell = ell;
  return r;
}

RepSpec RepSpec::parse(const std::string& descriptor) {
  std::vector<std::string> parts;
  size_t start = 0;
  for (;;) {
    size_t colon = descriptor.find(':', start);
    parts.push_back(descriptor.substr(start, colon - start));
    if (colon == std::string::npos) break;
    start = colon + 1;
  }
  const std::string& kind = parts[0];
  if (kind == "principal" && parts.size() == 3)
    return principal(parse_real(parts[1], "sigma"), parse_complex(parts[2]));
  if (kind == "complementary" && parts.size() == 2)
    return complementary(parse_real(parts[1], "lambda"));
  if (kind == "discrete" && parts.size() == 2) {
    double ell = parse_real(parts[1], "ell");
    if (!is_integer(ell)) throw DomainError("discrete series: ell must be an integer");
    return discrete(static_cast<int>(ell));
  }
  throw DomainError("unrecognised representation descriptor '" + descriptor + "'");
}

std::string RepSpec::descriptor() const {
  switch (kind) {
    case RepKind::Principal: return fmt::format("principal:{}:{}", sigma, format_complex(lambda));
    case RepKind::Complementary: return fmt::format("complementary:{}", lambda.real());
    case RepKind::Discrete: return fmt::format("discrete:{}", ell);
  }
  return {};
}

bool RepSpec::unitary() const {
  if (kind == RepKind::Principal) return std::fabs(lambda.real() + 0.5) < 1e-12;
  return true;
}

bool RepSpec::irreducible() const {
  if (kind == RepKind::Principal) return !(lambda.imag() == 0.0 && is_integer(lambda.real() + sigma));
  return true;
}

bool RepSpec::contains(double n) const {
  if (kind == RepKind::Discrete) {
    double j = n - 0.5 * ell;
    return is_integer(j) && j >= 0.0;
  }
  return is_integer(n);
}

long RepSpec::k_character(double n) const {
  if (!contains(n)) throw DomainError(fmt::format("index {} is not in the basis of {}", n, descriptor()));
  if (kind == RepKind::Principal) return std::lround(2.0 * n + 2.0 * sigma);
  return std::lround(2.0 * n);
}

double RepSpec::default_m() const { return kind == RepKind::Discrete ? 0.5 * ell : 0.0; }

std::vector<long> k_spectrum(const RepSpec& r, long limit) {
  if (limit < 0) throw DomainError("k_spectrum: limit must be non-negative");
  std::vector<long> out;
  switch (r.kind) {
    case RepKind::Principal:
    case RepKind::Complementary: {
      long parity = (r.kind == RepKind::Principal && r.sigma == 0.5) ? 1 : 0;
      for (long k = -limit; k <= limit; ++k)
        if (((k % 2) + 2) % 2 == parity) out.push_back(k);
      break;
    }
    case RepKind::Discrete:
      for (long k = r.ell; k <= limit; k += 2) out.push_back(k);
      break;
  }
  return out;
}

const char* coef_method_name(CoefMethod m) {
  return m == CoefMethod::ClosedForm ? "closed_form" : "oracle";
}

}  // namespace repnorm
