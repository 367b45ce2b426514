#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pdmc {

// Unsigned arbitrary-precision integer, little-endian 32-bit limbs.
// Only the operations the exact probability formulas need.
class BigInt {
 public:
  BigInt() = default;
  BigInt(std::uint64_t v);  // NOLINT(google-explicit-constructor)

  bool is_zero() const { return limbs_.empty(); }
  std::size_t bit_length() const;

  static int compare(const BigInt& a, const BigInt& b);
  bool operator==(const BigInt& o) const { return compare(*this, o) == 0; }
  bool operator!=(const BigInt& o) const { return compare(*this, o) != 0; }
  bool operator<(const BigInt& o) const { return compare(*this, o) < 0; }
  bool operator<=(const BigInt& o) const { return compare(*this, o) <= 0; }

  BigInt operator+(const BigInt& o) const;
  BigInt operator-(const BigInt& o) const;  // requires *this >= o
  BigInt operator*(const BigInt& o) const;
  BigInt operator<<(std::size_t bits) const;
  BigInt operator>>(std::size_t bits) const;

  static BigInt pow(const BigInt& base, std::uint64_t exp);
  static BigInt gcd(BigInt a, BigInt b);
  static BigInt binomial(std::uint64_t n, std::uint64_t k);

  // Value as mantissa * 2^exp2 with mantissa in [0.5, 1); exact enough for
  // presentation-boundary doubles.
  double to_double() const;
  void to_double_parts(double& mantissa, long& exp2) const;

  std::string to_string() const;  // decimal

 private:
  void trim();
  std::vector<std::uint32_t> limbs_;
};

struct BigIntDivMod {
  BigInt quot;
  BigInt rem;
};
BigIntDivMod big_divmod(const BigInt& a, const BigInt& b);  // b != 0

}  // namespace pdmc
