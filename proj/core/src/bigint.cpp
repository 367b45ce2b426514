#include "pdmc/bigint.hpp"

#include <cmath>
#include <stdexcept>

namespace pdmc {

BigInt::BigInt(std::uint64_t v) {
  while (v != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(v));
    v >>= 32;
  }
}

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

std::size_t BigInt::bit_length() const {
  if (limbs_.empty()) return 0;
  std::uint32_t top = limbs_.back();
  std::size_t bits = (limbs_.size() - 1) * 32;
  while (top != 0) {
    ++bits;
    top >>= 1;
  }
  return bits;
}

int BigInt::compare(const BigInt& a, const BigInt& b) {
  if (a.limbs_.size() != b.limbs_.size())
    return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
  for (std::size_t i = a.limbs_.size(); i-- > 0;) {
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
  }
  return 0;
}

BigInt BigInt::operator+(const BigInt& o) const {
  BigInt r;
  const std::size_t n = std::max(limbs_.size(), o.limbs_.size());
  r.limbs_.reserve(n + 1);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t s = carry;
    if (i < limbs_.size()) s += limbs_[i];
    if (i < o.limbs_.size()) s += o.limbs_[i];
    r.limbs_.push_back(static_cast<std::uint32_t>(s));
    carry = s >> 32;
  }
  if (carry) r.limbs_.push_back(static_cast<std::uint32_t>(carry));
  return r;
}

BigInt BigInt::operator-(const BigInt& o) const {
  if (compare(*this, o) < 0)
    throw std::logic_error("BigInt subtraction underflow");
  BigInt r;
  r.limbs_.reserve(limbs_.size());
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::int64_t d = static_cast<std::int64_t>(limbs_[i]) - borrow -
                     (i < o.limbs_.size() ? o.limbs_[i] : 0);
    if (d < 0) {
      d += (std::int64_t{1} << 32);
      borrow = 1;
    } else {
      borrow = 0;
    }
    r.limbs_.push_back(static_cast<std::uint32_t>(d));
  }
  r.trim();
  return r;
}

BigInt BigInt::operator*(const BigInt& o) const {
  if (is_zero() || o.is_zero()) return BigInt();
  BigInt r;
  r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < o.limbs_.size(); ++j) {
      std::uint64_t cur = r.limbs_[i + j] + carry +
                          static_cast<std::uint64_t>(limbs_[i]) * o.limbs_[j];
      r.limbs_[i + j] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    std::size_t k = i + o.limbs_.size();
    while (carry) {
      std::uint64_t cur = r.limbs_[k] + carry;
      r.limbs_[k] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
      ++k;
    }
  }
  r.trim();
  return r;
}

BigInt BigInt::operator<<(std::size_t bits) const {
  if (is_zero()) return BigInt();
  const std::size_t limb_shift = bits / 32;
  const std::size_t bit_shift = bits % 32;
  BigInt r;
  r.limbs_.assign(limbs_.size() + limb_shift + 1, 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t v = static_cast<std::uint64_t>(limbs_[i]) << bit_shift;
    r.limbs_[i + limb_shift] |= static_cast<std::uint32_t>(v);
    r.limbs_[i + limb_shift + 1] |= static_cast<std::uint32_t>(v >> 32);
  }
  r.trim();
  return r;
}

BigInt BigInt::operator>>(std::size_t bits) const {
  const std::size_t limb_shift = bits / 32;
  const std::size_t bit_shift = bits % 32;
  if (limb_shift >= limbs_.size()) return BigInt();
  BigInt r;
  r.limbs_.assign(limbs_.size() - limb_shift, 0);
  for (std::size_t i = 0; i < r.limbs_.size(); ++i) {
    std::uint64_t v = limbs_[i + limb_shift] >> bit_shift;
    if (bit_shift != 0 && i + limb_shift + 1 < limbs_.size())
      v |= static_cast<std::uint64_t>(limbs_[i + limb_shift + 1])
           << (32 - bit_shift);
    r.limbs_[i] = static_cast<std::uint32_t>(v);
  }
  r.trim();
  return r;
}

BigIntDivMod big_divmod(const BigInt& a, const BigInt& b) {
  if (b.is_zero()) throw std::logic_error("BigInt division by zero");
  BigIntDivMod out;
  if (BigInt::compare(a, b) < 0) {
    out.rem = a;
    return out;
  }
  const std::size_t shift = a.bit_length() - b.bit_length();
  BigInt cur = b << shift;
  BigInt rem = a;
  for (std::size_t i = 0; i <= shift; ++i) {
    out.quot = out.quot << 1;
    if (BigInt::compare(rem, cur) >= 0) {
      rem = rem - cur;
      out.quot = out.quot + BigInt(1);
    }
    cur = cur >> 1;
  }
  out.rem = rem;
  return out;
}

BigInt BigInt::pow(const BigInt& base, std::uint64_t exp) {
  BigInt r(1);
  BigInt b = base;
  while (exp != 0) {
    if (exp & 1) r = r * b;
    b = b * b;
    exp >>= 1;
  }
  return r;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  while (!b.is_zero()) {
    BigInt r = big_divmod(a, b).rem;
    a = b;
    b = r;
  }
  return a;
}

BigInt BigInt::binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return BigInt();
  if (k > n - k) k = n - k;
  BigInt r(1);
  for (std::uint64_t i = 0; i < k; ++i) {
    r = r * BigInt(n - i);
    r = big_divmod(r, BigInt(i + 1)).quot;
  }
  return r;
}

void BigInt::to_double_parts(double& mantissa, long& exp2) const {
  if (is_zero()) {
    mantissa = 0.0;
    exp2 = 0;
    return;
  }
  const std::size_t bits = bit_length();
  // Top 64 bits of the value.
  std::uint64_t top = 0;
  for (std::size_t i = 0; i < 64; ++i) {
    const std::size_t bit = bits - 1 - i;
    top <<= 1;
    if (bit < bits) {
      const std::size_t limb = bit / 32;
      if (limb < limbs_.size() && ((limbs_[limb] >> (bit % 32)) & 1)) top |= 1;
    }
    if (bit == 0) {
      top <<= (63 - i);
      break;
    }
  }
  mantissa = std::ldexp(static_cast<double>(top), -64);
  exp2 = static_cast<long>(bits);
}

double BigInt::to_double() const {
  double m;
  long e;
  to_double_parts(m, e);
  return std::ldexp(m, static_cast<int>(e));
}

std::string BigInt::to_string() const {
  if (is_zero()) return "0";
  std::vector<std::uint32_t> work(limbs_);
  std::string out;
  while (!work.empty()) {
    std::uint64_t rem = 0;
    for (std::size_t i = work.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | work[i];
      work[i] = static_cast<std::uint32_t>(cur / 1000000000ULL);
      rem = cur % 1000000000ULL;
    }
    while (!work.empty() && work.back() == 0) work.pop_back();
    for (int i = 0; i < 9; ++i) {
      out.push_back(static_cast<char>('0' + rem % 10));
      rem /= 10;
      if (work.empty() && rem == 0) break;
    }
  }
  return std::string(out.rbegin(), out.rend());
}

}  // namespace pdmc
