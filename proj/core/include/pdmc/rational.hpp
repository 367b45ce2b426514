#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "pdmc/bigint.hpp"

namespace pdmc {

// Exact rational number; probabilities are computed with these and converted
// to double only at the presentation boundary.
class Rational {
 public:
  Rational() : num_(0), den_(1), neg_(false) {}
  Rational(std::uint64_t num, std::uint64_t den = 1)
      : num_(num), den_(den), neg_(false) {
    normalize();
  }
  Rational(BigInt num, BigInt den, bool negative = false)
      : num_(std::move(num)), den_(std::move(den)), neg_(negative) {
    normalize();
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool negative() const { return neg_; }
  bool is_zero() const { return num_.is_zero(); }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;

  bool operator==(const Rational& o) const {
    return neg_ == o.neg_ && num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;
  bool operator<=(const Rational& o) const { return *this < o || *this == o; }

  double to_double() const;
  std::string to_string() const;  // "num/den" (or "num" when den == 1)

 private:
  void normalize();
  BigInt num_;
  BigInt den_;
  bool neg_;
};

inline void Rational::normalize() {
  if (den_.is_zero()) throw std::logic_error("Rational with zero denominator");
  if (num_.is_zero()) {
    den_ = BigInt(1);
    neg_ = false;
    return;
  }
  BigInt g = BigInt::gcd(num_, den_);
  num_ = big_divmod(num_, g).quot;
  den_ = big_divmod(den_, g).quot;
}

inline Rational Rational::operator+(const Rational& o) const {
  BigInt a = num_ * o.den_;
  BigInt b = o.num_ * den_;
  BigInt den = den_ * o.den_;
  if (neg_ == o.neg_) return Rational(a + b, den, neg_);
  if (BigInt::compare(a, b) >= 0) return Rational(a - b, den, neg_);
  return Rational(b - a, den, o.neg_);
}

inline Rational Rational::operator-(const Rational& o) const {
  Rational flipped = o;
  if (!o.is_zero()) flipped = Rational(o.num_, o.den_, !o.neg_);
  return *this + flipped;
}

inline Rational Rational::operator*(const Rational& o) const {
  return Rational(num_ * o.num_, den_ * o.den_, neg_ != o.neg_);
}

inline Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) throw std::logic_error("Rational division by zero");
  return Rational(num_ * o.den_, den_ * o.num_, neg_ != o.neg_);
}

inline bool Rational::operator<(const Rational& o) const {
  if (neg_ != o.neg_) return neg_;
  const int c = BigInt::compare(num_ * o.den_, o.num_ * den_);
  return neg_ ? c > 0 : c < 0;
}

inline double Rational::to_double() const {
  if (is_zero()) return 0.0;
  double mn, md;
  long en, ed;
  num_.to_double_parts(mn, en);
  den_.to_double_parts(md, ed);
  const double v = std::ldexp(mn / md, static_cast<int>(en - ed));
  return neg_ ? -v : v;
}

inline std::string Rational::to_string() const {
  std::string s = neg_ ? "-" : "";
  s += num_.to_string();
  if (!(den_ == BigInt(1))) s += "/" + den_.to_string();
  return s;
}

}  // namespace pdmc
