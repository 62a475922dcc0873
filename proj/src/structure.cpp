#include "repnorm/structure.hpp"

#include <cstdlib>
#include <numeric>

#include "repnorm/errors.hpp"

namespace repnorm {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  num_ = num / g;
  den_ = den / g;
}

std::string Rational::str() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}
bool operator<(const Rational& a, const Rational& b) { return a.num_ * b.den_ < b.num_ * a.den_; }

namespace {
LieType make(LieFamily f, int n, int min_n) {
  if (n < min_n) throw DomainError("LieType: rank parameter too small");
  LieType t;
  t.family = f;
  t.n = n;
  return t;
}
}  // namespace

LieType LieType::so1n(int n) { return make(LieFamily::SO1n, n, 2); }
LieType LieType::su1n(int n) { return make(LieFamily::SU1n, n, 2); }
LieType LieType::sp1n(int n) { return make(LieFamily::SP1n, n, 2); }
LieType LieType::f4m20() { return make(LieFamily::F4m20, 0, 0); }
LieType LieType::slnR(int n) { return make(LieFamily::SLnR, n, 2); }

LieType LieType::parse(const std::string& s) {
  if (s == "f4" || s == "f4m20") return f4m20();
  auto colon = s.find(':');
  if (colon == std::string::npos) throw DomainError("LieType: expected <family>:<n>, got '" + s + "'");
  std::string fam = s.substr(0, colon), arg = s.substr(colon + 1);
  char* end = nullptr;
  long n = std::strtol(arg.c_str(), &end, 10);
  if (arg.empty() || *end != '\0' || n > 100000) throw DomainError("LieType: bad rank parameter '" + arg + "'");
  int ni = static_cast<int>(n);
  if (fam == "so1n") return so1n(ni);
  if (fam == "su1n") return su1n(ni);
  if (fam == "sp1n") return sp1n(ni);
  if (fam == "sl" || fam == "slnR") return slnR(ni);
  throw DomainError("LieType: unsupported family '" + fam + "'");
}

std::string LieType::name() const {
  switch (family) {
    case LieFamily::SO1n: return "so(1," + std::to_string(n) + ")";
    case LieFamily::SU1n: return "su(1," + std::to_string(n) + ")";
    case LieFamily::SP1n: return "sp(1," + std::to_string(n) + ")";
    case LieFamily::F4m20: return "f4(-20)";
    case LieFamily::SLnR: return "sl(" + std::to_string(n) + ",R)";
  }
  return {};
}

int LieType::rank_k() const {
  switch (family) {
    case LieFamily::SO1n: return n / 2;     // K = SO(n)
    case LieFamily::SU1n: return n;         // K = S(U(1) x U(n))
    case LieFamily::SP1n: return n + 1;     // K = Sp(1) x Sp(n)
    case LieFamily::F4m20: return 4;        // K = Spin(9)
    case LieFamily::SLnR: return n / 2;     // K = SO(n)
  }
  return 0;
}

Rational structural_constant(const LieType& t) {
  const std::int64_t n = t.n;
  switch (t.family) {
    case LieFamily::SO1n: return Rational(n - 1, 2);
    case LieFamily::SU1n: return Rational(n);
    case LieFamily::SP1n: return Rational(2 * n + 1);
    case LieFamily::F4m20: return Rational(11);
    case LieFamily::SLnR: return Rational(n * (n * n - 1), 12);
  }
  throw DomainError("structural_constant: unsupported family");
}

double mps_gap_bound(const LieType& t, double c, double R) {
  if (!(c > 0.0) || !(R >= 0.0)) throw DomainError("mps_gap_bound: need c > 0 and R >= 0");
  return (Rational(2) * structural_constant(t) + Rational(t.rank_k())).to_double() + c * R;
}

Rational domination_threshold(const LieType& t, SeriesClass series) {
  const std::int64_t n = t.n;
  if (t.family == LieFamily::SO1n) return Rational(n - 1, 2);
  if (t.family == LieFamily::SU1n) {
    switch (series) {
      case SeriesClass::PrincipalMPS: return Rational(2 * n - 1, 2);
      case SeriesClass::GeneralizedVerma: return Rational(n, 2);
      case SeriesClass::OtherDiscrete: return Rational(n - 1);
    }
  }
  throw DomainError("domination_threshold: only so(1,n) and su(1,n) are covered");
}

std::pair<Rational, Rational> lorentz_sobolev_bound(int n) {
  if (n < 2) throw DomainError("lorentz_sobolev_bound: n must be >= 2");
  return {Rational(n - 1, 2), Rational(n, 2)};
}

}  // namespace repnorm
