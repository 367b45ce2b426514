#include "pdmc/bch.hpp"

#include <algorithm>

namespace pdmc {

namespace {

// Polynomials over a field as coefficient vectors, low-to-high.

void poly_trim(Vec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Vec poly_mul(const Field& f, const Vec& a, const Vec& b) {
  if (a.empty() || b.empty()) return {};
  Vec r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  return r;
}

Label poly_eval(const Field& f, const Vec& a, Label x) {
  Label acc = 0;
  for (std::size_t i = a.size(); i-- > 0;) acc = f.add(f.mul(acc, x), a[i]);
  return acc;
}

Vec poly_derivative(const Field& f, const Vec& a) {
  if (a.size() <= 1) return {};
  const std::uint32_t p = f.characteristic();
  Vec r(a.size() - 1, 0);
  for (std::size_t i = 1; i < a.size(); ++i) {
    Label scale = 0;
    for (std::size_t rep = 0; rep < i % p; ++rep) scale = f.add(scale, 1);
    r[i - 1] = f.mul(scale, a[i]);
  }
  poly_trim(r);
  return r;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> fs;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d) {
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

}  // namespace

Label primitive_element(const Field& f) {
  const std::uint32_t q = f.order();
  const auto factors = prime_factors(q - 1);
  for (std::uint32_t cand = 2; cand < q; ++cand) {
    bool primitive = true;
    for (std::uint32_t pf : factors) {
      if (f.pow(static_cast<Label>(cand), (q - 1) / pf) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return static_cast<Label>(cand);
  }
  return 1;  // GF(2)
}

std::vector<std::vector<std::size_t>> cyclotomic_cosets(std::size_t n,
                                                        std::uint64_t base) {
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::size_t>> cosets;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> coset;
    std::size_t e = s;
    do {
      coset.push_back(e);
      seen[e] = true;
      e = static_cast<std::size_t>(e * base % n);
    } while (e != s);
    std::sort(coset.begin(), coset.end());
    cosets.push_back(std::move(coset));
  }
  return cosets;
}

BchCode bch_build(std::uint32_t p, std::uint32_t m, std::size_t n,
                  std::size_t b, std::size_t delta) {
  FieldPtr symbol = make_field(p);
  FieldPtr locator = make_field(p, m);
  const std::uint32_t qm = locator->order();
  if (n == 0 || (qm - 1) % n != 0)
    throw OrderMismatchError("n does not divide p^m - 1");
  if (delta < 2 || delta > n) throw BadParamsError("designed distance out of range");

  const Field& lf = *locator;
  const Label alpha = lf.pow(primitive_element(lf), (qm - 1) / n);

  const auto cosets = cyclotomic_cosets(n, p);
  std::vector<std::size_t> coset_of(n);
  for (std::size_t ci = 0; ci < cosets.size(); ++ci)
    for (std::size_t e : cosets[ci]) coset_of[e] = ci;

  std::vector<bool> used(cosets.size(), false);
  Vec g_ext{1};  // over the locator field while multiplying
  for (std::size_t j = 0; j + 1 < delta; ++j) {
    const std::size_t ci = coset_of[(b + j) % n];
    if (used[ci]) continue;
    used[ci] = true;
    // Minimal polynomial of alpha^leader: product over the coset.
    for (std::size_t e : cosets[ci]) {
      Vec lin{lf.neg(lf.pow(alpha, e)), 1};
      g_ext = poly_mul(lf, g_ext, lin);
    }
  }
  // Coefficients must land in the prime subfield (labels < p).
  Vec g(g_ext.size());
  for (std::size_t i = 0; i < g_ext.size(); ++i) {
    if (g_ext[i] >= p)
      throw BadParamsError("generator polynomial left the prime subfield");
    g[i] = g_ext[i];
  }
  const std::size_t deg = g.size() - 1;
  if (deg >= n) throw BadParamsError("designed distance leaves no dimension");
  const std::size_t k = n - deg;

  MatrixFq gen(symbol, k, n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < g.size(); ++j) gen.set(i, i + j, g[j]);
  LinearCode code = code_from_generator(gen, false);
  code.d_designed = delta;

  BchSpec spec{p, m, n, b, delta, symbol, locator, alpha, cosets, g};
  return BchCode{std::move(spec), std::move(code)};
}

BchOffsetSearch bch_best_offset(std::uint32_t p, std::uint32_t m,
                                std::size_t n, std::size_t delta) {
  FieldPtr locator = make_field(p, m);
  if (n == 0 || (locator->order() - 1) % n != 0)
    throw OrderMismatchError("n does not divide p^m - 1");
  const auto cosets = cyclotomic_cosets(n, p);
  std::vector<std::size_t> coset_of(n);
  for (std::size_t ci = 0; ci < cosets.size(); ++ci)
    for (std::size_t e : cosets[ci]) coset_of[e] = ci;

  BchOffsetSearch best;
  bool found = false;
  for (std::size_t b = 0; b < n; ++b) {
    std::vector<bool> used(cosets.size(), false);
    std::size_t deg = 0;
    for (std::size_t j = 0; j + 1 < delta; ++j) {
      const std::size_t ci = coset_of[(b + j) % n];
      if (!used[ci]) {
        used[ci] = true;
        deg += cosets[ci].size();
      }
    }
    if (deg >= n) continue;
    const std::size_t k = n - deg;
    if (!found || k > best.best_k) {
      best.best_b = b;
      best.best_k = k;
      found = true;
    }
  }
  if (!found) throw BadParamsError("no offset leaves a nonzero dimension");
  return best;
}

std::optional<Decoding> bm_decode(const BchCode& bch, const Vec& y) {
  const BchSpec& spec = bch.spec;
  const std::size_t n = spec.n;
  if (y.size() != n) throw LengthMismatchError("received word length != n");
  const Field& lf = *spec.locator_field;
  const std::uint32_t p = spec.p;

  // Syndromes S_j = y(alpha^{b+j}); prime-subfield labels embed verbatim.
  const std::size_t ns = spec.delta - 1;
  Vec syn(ns, 0);
  bool clean = true;
  for (std::size_t j = 0; j < ns; ++j) {
    const Label point = lf.pow(spec.alpha, (spec.b + j) % n);
    syn[j] = poly_eval(lf, y, point);
    clean = clean && syn[j] == 0;
  }
  if (clean) return Decoding{y, Vec(n, 0)};

  // Berlekamp-Massey for the connection polynomial of the syndrome sequence.
  Vec cur{1}, prev{1};
  std::size_t l = 0, gap = 1;
  Label last_disc = 1;
  for (std::size_t i = 0; i < ns; ++i) {
    Label disc = syn[i];
    for (std::size_t j = 1; j <= l && j < cur.size(); ++j)
      disc = lf.add(disc, lf.mul(cur[j], syn[i - j]));
    if (disc == 0) {
      ++gap;
      continue;
    }
    const Label factor = lf.div(disc, last_disc);
    Vec next = cur;
    if (next.size() < prev.size() + gap) next.resize(prev.size() + gap, 0);
    for (std::size_t j = 0; j < prev.size(); ++j)
      next[j + gap] = lf.sub(next[j + gap], lf.mul(factor, prev[j]));
    if (2 * l <= i) {
      prev = cur;
      last_disc = disc;
      l = i + 1 - l;
      gap = 1;
    } else {
      ++gap;
    }
    cur = std::move(next);
  }
  Vec sigma = cur;
  poly_trim(sigma);
  if (sigma.size() <= 1 || sigma.size() - 1 != l) return std::nullopt;
  if (l > bch.radius()) return std::nullopt;

  // Root scan over the n-th roots of unity: position i errs when
  // sigma(alpha^{-i}) = 0.
  std::vector<std::size_t> locations;
  for (std::size_t i = 0; i < n; ++i) {
    const Label x_inv = lf.pow(spec.alpha, (n - i) % n);
    if (poly_eval(lf, sigma, x_inv) == 0) locations.push_back(i);
  }
  if (locations.size() != l) return std::nullopt;

  // Error values: Y = -Omega(X^{-1}) * X^{1-b} / sigma'(X^{-1}) with
  // Omega = S(x) sigma(x) mod x^{delta-1}.
  Vec omega = poly_mul(lf, syn, sigma);
  if (omega.size() > ns) omega.resize(ns);
  poly_trim(omega);
  const Vec sigma_d = poly_derivative(lf, sigma);
  Vec error(n, 0);
  for (std::size_t pos : locations) {
    const Label x = lf.pow(spec.alpha, pos);
    const Label x_inv = lf.pow(spec.alpha, (n - pos) % n);
    const Label denom = poly_eval(lf, sigma_d, x_inv);
    if (denom == 0) return std::nullopt;
    const std::size_t exp_1mb = (n + 1 - spec.b % n) % n;
    const Label value = lf.neg(
        lf.div(lf.mul(poly_eval(lf, omega, x_inv), lf.pow(x, exp_1mb)), denom));
    if (value == 0 || value >= p) return std::nullopt;
    error[pos] = value;
  }

  const Field& sf = *spec.symbol_field;
  Vec corrected = vec_sub(sf, y, error);
  if (!bch.code.contains(corrected)) return std::nullopt;
  return Decoding{std::move(corrected), std::move(error)};
}

}  // namespace pdmc
