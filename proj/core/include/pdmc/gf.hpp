#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pdmc/errors.hpp"

namespace pdmc {

// Integer label of a field element, in [0, q). Element i corresponds to the
// base-p digit expansion of i read as a coefficient vector, so labels are a
// fixed bijection with field elements and double as q-ary cell levels.
using Label = std::uint16_t;

// Exact arithmetic for GF(p) and GF(p^m). Immutable after construction and
// safe to share across threads. Small fields (q <= 1024) are fully
// table-driven; larger ones fall back to polynomial arithmetic.
class Field {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 16;
  static constexpr std::uint32_t kTableLimit = 1024;

  // modulus: coefficients low-to-high, monic of degree m over GF(p); required
  // form for m >= 2, must be absent for m = 1. When omitted for m >= 2 the
  // lexicographically smallest monic irreducible (coefficients compared
  // low-to-high) is selected, so fields reproduce bit-identically.
  explicit Field(std::uint32_t p, std::uint32_t m = 1,
                 std::optional<std::vector<Label>> modulus = std::nullopt);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return m_; }
  std::uint32_t order() const { return q_; }
  bool prime_field() const { return m_ == 1; }
  const std::vector<Label>& modulus() const { return modulus_; }

  Label add(Label a, Label b) const;
  Label sub(Label a, Label b) const;
  Label neg(Label a) const;
  Label mul(Label a, Label b) const;
  Label inv(Label a) const;  // throws ZeroInverseError on a == 0
  Label div(Label a, Label b) const { return mul(a, inv(b)); }
  Label pow(Label a, std::uint64_t e) const;

  std::vector<Label> coeffs(Label a) const;
  Label from_coeffs(const std::vector<Label>& c) const;

  // Structural identity: same p, m and modulus.
  bool same_field(const Field& o) const {
    return p_ == o.p_ && m_ == o.m_ && modulus_ == o.modulus_;
  }

  // "p", "p^m" or "p^m/c0,c1,...,cm".
  std::string spec_string() const;

 private:
  void check_label(Label a) const;
  Label mul_nocache(Label a, Label b) const;
  Label add_nocache(Label a, Label b) const;

  std::uint32_t p_ = 0;
  std::uint32_t m_ = 1;
  std::uint32_t q_ = 0;
  std::vector<Label> modulus_;  // empty for m == 1
  std::vector<Label> add_table_;
  std::vector<Label> mul_table_;
  std::vector<Label> inv_table_;
  std::vector<Label> neg_table_;
};

using FieldPtr = std::shared_ptr<const Field>;

// Checked construction: validates primality and irreducibility.
FieldPtr make_field(std::uint32_t p, std::uint32_t m = 1,
                    std::optional<std::vector<Label>> modulus = std::nullopt);

// (v + 1) mod q on integer labels. The wraparound pair {q-1, 0} counts as
// consecutive; all "consecutive value" logic in the masking schemes runs on
// labels, not on abstract field structure.
inline Label successor(Label v, std::uint32_t q) {
  return static_cast<Label>((v + 1u) % q);
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Value-semantics wrapper pairing a label with its field; arithmetic between
// mismatched fields throws FieldMismatchError.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Label value) : f_(std::move(field)), v_(value) {}

  Label label() const { return v_; }
  const FieldPtr& field() const { return f_; }

  FieldElement operator+(const FieldElement& o) const {
    return FieldElement(f_, check(o).add(v_, o.v_));
  }
  FieldElement operator-(const FieldElement& o) const {
    return FieldElement(f_, check(o).sub(v_, o.v_));
  }
  FieldElement operator*(const FieldElement& o) const {
    return FieldElement(f_, check(o).mul(v_, o.v_));
  }
  FieldElement operator/(const FieldElement& o) const {
    return FieldElement(f_, check(o).div(v_, o.v_));
  }
  FieldElement operator-() const { return FieldElement(f_, f_->neg(v_)); }
  FieldElement inverse() const { return FieldElement(f_, f_->inv(v_)); }

  bool operator==(const FieldElement& o) const {
    return f_->same_field(*o.f_) && v_ == o.v_;
  }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

 private:
  const Field& check(const FieldElement& o) const {
    if (!f_->same_field(*o.f_))
      throw FieldMismatchError("operands from different fields");
    return *f_;
  }
  FieldPtr f_;
  Label v_;
};

}  // namespace pdmc
