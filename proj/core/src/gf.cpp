#include "pdmc/gf.hpp"

#include <algorithm>

namespace pdmc {

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients low-to-high, mod p

void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod b over GF(p); b monic-normalizable (leading coefficient nonzero).
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p,
              const std::vector<std::uint32_t>& inv_mod_p) {
  poly_trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint32_t lead_inv = inv_mod_p[b.back()];
  while (a.size() > db) {
    const std::uint32_t factor =
        static_cast<std::uint32_t>((static_cast<std::uint64_t>(a.back()) * lead_inv) % p);
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i < b.size(); ++i) {
      std::uint64_t sub = static_cast<std::uint64_t>(factor) * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    poly_trim(a);
    if (a.empty()) break;
  }
  return a;
}

std::vector<std::uint32_t> inverses_mod_p(std::uint32_t p) {
  std::vector<std::uint32_t> inv(p, 0);
  for (std::uint32_t a = 1; a < p; ++a) {
    std::uint64_t acc = 1, base = a;
    std::uint32_t e = p - 2;
    while (e) {
      if (e & 1) acc = acc * base % p;
      base = base * base % p;
      e >>= 1;
    }
    inv[a] = static_cast<std::uint32_t>(acc);
  }
  return inv;
}

// Trial division by all monic polynomials of degree 1..deg/2.
bool poly_irreducible(const Poly& f, std::uint32_t p,
                      const std::vector<std::uint32_t>& inv_mod_p) {
  const std::size_t deg = f.size() - 1;
  if (deg == 0) return false;
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly div(d + 1, 0);
      std::uint64_t v = idx;
      for (std::size_t i = 0; i < d; ++i) {
        div[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      div[d] = 1;
      if (poly_mod(f, div, p, inv_mod_p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

Field::Field(std::uint32_t p, std::uint32_t m,
             std::optional<std::vector<Label>> modulus)
    : p_(p), m_(m) {
  if (!is_prime(p)) throw NotPrimeError("p = " + std::to_string(p) + " is not prime");
  if (m < 1) throw BadParamsError("extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxOrder)
      throw BadParamsError("field order exceeds 2^16");
  }
  q_ = static_cast<std::uint32_t>(q);

  const auto inv_mod_p = inverses_mod_p(p);
  if (m == 1) {
    if (modulus.has_value())
      throw BadParamsError("prime field takes no modulus");
  } else if (modulus.has_value()) {
    auto& mod = *modulus;
    if (mod.size() != m + 1 || mod.back() != 1)
      throw BadParamsError("modulus must be monic of degree m");
    for (Label c : mod)
      if (c >= p) throw BadParamsError("modulus coefficient out of range");
    Poly f(mod.begin(), mod.end());
    if (!poly_irreducible(f, p, inv_mod_p))
      throw ReducibleModulusError("modulus is reducible over GF(" +
                                  std::to_string(p) + ")");
    modulus_.assign(mod.begin(), mod.end());
  } else {
    // Lexicographically smallest monic irreducible, coefficients compared
    // low-to-high: enumerate with c0 as the most significant digit.
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < m; ++i) count *= p;
    bool found = false;
    for (std::uint64_t idx = 0; idx < count && !found; ++idx) {
      Poly f(m + 1, 0);
      std::uint64_t v = idx;
      for (std::uint32_t i = 0; i < m; ++i) {
        f[m - 1 - i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      f[m] = 1;
      if (poly_irreducible(f, p, inv_mod_p)) {
        modulus_.assign(f.begin(), f.end());
        found = true;
      }
    }
    if (!found)
      throw ReducibleModulusError("no irreducible polynomial found");  // unreachable
  }

  neg_table_.resize(q_);
  for (std::uint32_t a = 0; a < q_; ++a) {
    // Digit-wise negation mod p.
    std::uint32_t r = 0, scale = 1, v = a;
    for (std::uint32_t i = 0; i < m_; ++i) {
      r += ((p_ - v % p_) % p_) * scale;
      scale *= p_;
      v /= p_;
    }
    neg_table_[a] = static_cast<Label>(r);
  }
  if (q_ <= kTableLimit) {
    add_table_.resize(static_cast<std::size_t>(q_) * q_);
    mul_table_.resize(static_cast<std::size_t>(q_) * q_);
    for (std::uint32_t a = 0; a < q_; ++a)
      for (std::uint32_t b = 0; b < q_; ++b) {
        add_table_[static_cast<std::size_t>(a) * q_ + b] =
            add_nocache(static_cast<Label>(a), static_cast<Label>(b));
        mul_table_[static_cast<std::size_t>(a) * q_ + b] =
            mul_nocache(static_cast<Label>(a), static_cast<Label>(b));
      }
    inv_table_.resize(q_);
    for (std::uint32_t a = 1; a < q_; ++a) inv_table_[a] = pow(static_cast<Label>(a), q_ - 2);
  }
}

void Field::check_label(Label a) const {
  if (a >= q_) throw BadParamsError("label " + std::to_string(a) + " out of range");
}

Label Field::add_nocache(Label a, Label b) const {
  if (m_ == 1) return static_cast<Label>((static_cast<std::uint32_t>(a) + b) % p_);
  std::uint32_t r = 0, scale = 1, va = a, vb = b;
  for (std::uint32_t i = 0; i < m_; ++i) {
    r += ((va % p_) + (vb % p_)) % p_ * scale;
    scale *= p_;
    va /= p_;
    vb /= p_;
  }
  return static_cast<Label>(r);
}

Label Field::mul_nocache(Label a, Label b) const {
  if (m_ == 1)
    return static_cast<Label>(static_cast<std::uint64_t>(a) * b % p_);
  // Convolve digit vectors, reduce modulo the field polynomial.
  std::vector<std::uint32_t> ca(m_), cb(m_);
  std::uint32_t va = a, vb = b;
  for (std::uint32_t i = 0; i < m_; ++i) {
    ca[i] = va % p_;
    cb[i] = vb % p_;
    va /= p_;
    vb /= p_;
  }
  std::vector<std::uint64_t> prod(2 * m_ - 1, 0);
  for (std::uint32_t i = 0; i < m_; ++i) {
    if (ca[i] == 0) continue;
    for (std::uint32_t j = 0; j < m_; ++j) prod[i + j] += static_cast<std::uint64_t>(ca[i]) * cb[j];
  }
  // Reduce degrees >= m using x^m = -(modulus minus leading term).
  for (std::size_t d = prod.size(); d-- > m_;) {
    const std::uint64_t coef = prod[d] % p_;
    if (coef == 0) continue;
    for (std::uint32_t i = 0; i < m_; ++i) {
      const std::uint64_t sub = coef * modulus_[i] % p_;
      prod[d - m_ + i] += p_ - sub;
    }
    prod[d] = 0;
  }
  std::uint32_t r = 0, scale = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    r += static_cast<std::uint32_t>(prod[i] % p_) * scale;
    scale *= p_;
  }
  return static_cast<Label>(r);
}

Label Field::add(Label a, Label b) const {
  check_label(a);
  check_label(b);
  if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * q_ + b];
  return add_nocache(a, b);
}

Label Field::sub(Label a, Label b) const { return add(a, neg(b)); }

Label Field::neg(Label a) const {
  check_label(a);
  return neg_table_[a];
}

Label Field::mul(Label a, Label b) const {
  check_label(a);
  check_label(b);
  if (!mul_table_.empty()) return mul_table_[static_cast<std::size_t>(a) * q_ + b];
  return mul_nocache(a, b);
}

Label Field::inv(Label a) const {
  check_label(a);
  if (a == 0) throw ZeroInverseError("zero has no multiplicative inverse");
  if (!inv_table_.empty()) return inv_table_[a];
  return pow(a, q_ - 2);
}

Label Field::pow(Label a, std::uint64_t e) const {
  check_label(a);
  Label r = 1;
  Label base = a;
  while (e != 0) {
    if (e & 1) r = mul_nocache(r, base);
    base = mul_nocache(base, base);
    e >>= 1;
  }
  return r;
}

std::vector<Label> Field::coeffs(Label a) const {
  check_label(a);
  std::vector<Label> c(m_);
  std::uint32_t v = a;
  for (std::uint32_t i = 0; i < m_; ++i) {
    c[i] = static_cast<Label>(v % p_);
    v /= p_;
  }
  return c;
}

Label Field::from_coeffs(const std::vector<Label>& c) const {
  if (c.size() != m_) throw BadParamsError("coefficient vector has wrong length");
  std::uint32_t r = 0, scale = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    if (c[i] >= p_) throw BadParamsError("coefficient out of range");
    r += c[i] * scale;
    scale *= p_;
  }
  return static_cast<Label>(r);
}

std::string Field::spec_string() const {
  std::string s = std::to_string(p_);
  if (m_ == 1) return s;
  s += "^" + std::to_string(m_);
  s += "/";
  for (std::size_t i = 0; i < modulus_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(modulus_[i]);
  }
  return s;
}

FieldPtr make_field(std::uint32_t p, std::uint32_t m,
                    std::optional<std::vector<Label>> modulus) {
  return std::make_shared<const Field>(p, m, std::move(modulus));
}

}  // namespace pdmc
