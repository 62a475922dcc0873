#pragma once

#include <cstdint>
#include <string>
#include <utility>

namespace repnorm {

// Reduced fraction with positive denominator.
class Rational {
 public:
  Rational(std::int64_t num = 0, std::int64_t den = 1);
  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Rational& a, const Rational& b);

 private:
  std::int64_t num_, den_;
};

enum class LieFamily { SO1n, SU1n, SP1n, F4m20, SLnR };

struct LieType {
  LieFamily family = LieFamily::SO1n;
  int n = 2;  // unused for F4m20

  static LieType so1n(int n);
  static LieType su1n(int n);
  static LieType sp1n(int n);
  static LieType f4m20();
  static LieType slnR(int n);
  // "so1n:3", "su1n:2", "sp1n:1", "f4", "sl:3"
  static LieType parse(const std::string& s);
  std::string name() const;
  // Rank of the maximal compact subgroup K.
  int rank_k() const;
};

Rational structural_constant(const LieType& t);
// 2 c_g + rank K + c R.
double mps_gap_bound(const LieType& t, double c, double R);

enum class SeriesClass { PrincipalMPS, GeneralizedVerma, OtherDiscrete };
Rational domination_threshold(const LieType& t, SeriesClass series);

// (K-type bound exponent, Sobolev domination threshold) = ((n-1)/2, n/2).
std::pair<Rational, Rational> lorentz_sobolev_bound(int n);

}  // namespace repnorm
