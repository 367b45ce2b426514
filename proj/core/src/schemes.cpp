#include "pdmc/schemes.hpp"

#include <algorithm>

#include "pdmc/rng.hpp"

namespace pdmc {

namespace {

void require_prime_field(const Field& f, const char* scheme) {
  if (!f.prime_field())
    throw BadParamsError(std::string(scheme) +
                         " needs a prime field: consecutive-label arithmetic "
                         "must coincide with field arithmetic");
}

void check_stuck_set(const std::vector<std::size_t>& phi, std::size_t n) {
  for (std::size_t i : phi)
    if (i >= n) throw BadParamsError("stuck position out of range");
}

void check_error_value(const Field& f, Label x) {
  if (x == 0 || x >= f.order())
    throw BadParamsError("error magnitude must lie in [1, q-1]");
}

}  // namespace

std::optional<Decoding> CodeDecoder::decode(const Vec& y, std::size_t t) const {
  if (t == 0)
    return code_->contains(y)
               ? std::optional<Decoding>(Decoding{y, Vec(y.size(), 0)})
               : std::nullopt;
  const std::uint64_t count =
      pattern_count(code_->n, t, code_->field->order(), BoundedDecoder::kMaxTable);
  if (count < BoundedDecoder::kMaxTable) {
    const BoundedDecoder* table = nullptr;
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = tables_.find(t);
      if (it == tables_.end())
        it = tables_.emplace(t, std::make_unique<BoundedDecoder>(*code_, t)).first;
      table = it->second.get();
    }
    return table->decode(y);
  }
  if (bch_ != nullptr && t <= bch_->radius()) {
    auto dec = bm_decode(*bch_, y);
    if (dec && hamming_weight(dec->error) > t) return std::nullopt;
    return dec;
  }
  throw CapacityExceededError("no decoder can serve this radius");
}

std::optional<Label> find_pair_start(const Field& f, const Vec& stuck_values,
                                     Label x) {
  check_error_value(f, x);
  const std::uint32_t q = f.order();
  for (std::uint32_t v = 0; v < q; ++v) {
    const Label v2 = static_cast<Label>((v + x) % q);
    bool ok = true;
    for (Label w : stuck_values) {
      if (w == v || w == v2) {
        ok = false;
        break;
      }
    }
    if (ok) return static_cast<Label>(v);
  }
  return std::nullopt;
}

Construction1Scheme::Construction1Scheme(std::shared_ptr<const LinearCode> code,
                                         std::size_t r,
                                         std::shared_ptr<const BchCode> bch)
    : code_(std::move(code)), r_(r), bch_(std::move(bch)) {
  require_prime_field(*code_->field, "construction 1");
  decoder_ = std::make_shared<CodeDecoder>(code_, bch_);
}

Construction1Scheme Construction1Scheme::plain(FieldPtr field, std::size_t n,
                                               std::size_t r) {
  if (n < r + 1) throw BadParamsError("need n >= r + 1");
  const std::size_t k = n - r;
  MatrixFq g(field, k, n);
  for (std::size_t i = 0; i + 1 < k; ++i) g.set(i, i + 1, 1);
  for (std::size_t j = 0; j < n; ++j) g.set(k - 1, j, 1);
  LinearCode code = code_from_generator(g, false);
  code.d_known = 1;
  return Construction1Scheme(
      std::make_shared<const LinearCode>(std::move(code)), r, nullptr);
}

Construction1Scheme Construction1Scheme::from_code(LinearCode host) {
  const std::size_t k = host.k;
  const std::size_t n = host.n;
  if (k < 2) throw BadParamsError("host code needs k >= 2");
  // Row-reduce the generator into [0 | I | P] over the all-one row. A
  // codeword is pinned by its first k coordinates, so build each row by
  // solving against the leading k x k submatrix.
  std::vector<std::size_t> lead(k);
  for (std::size_t j = 0; j < k; ++j) lead[j] = j;
  MatrixFq a = host.G.select_cols(lead);
  std::vector<Vec> rows;
  for (std::size_t i = 1; i < k; ++i) {
    Vec target(k, 0);
    target[i] = 1;
    Vec x = solve_full_rank(a, target);  // RankDeficientError if not systematic
    rows.push_back(mul_vec_mat(x, host.G));
  }
  Vec ones_target(k, 1);
  Vec x1 = solve_full_rank(a, ones_target);
  Vec ones_row = mul_vec_mat(x1, host.G);
  for (Label v : ones_row)
    if (v != 1)
      throw BadParamsError("all-one word is not a codeword of the host code");
  rows.push_back(std::move(ones_row));

  LinearCode code = host;
  code.G = MatrixFq::from_rows(host.field, rows);
  return Construction1Scheme(
      std::make_shared<const LinearCode>(std::move(code)), n - k, nullptr);
}

Construction1Scheme Construction1Scheme::from_bch(BchCode host) {
  Construction1Scheme s = from_code(host.code);
  s.bch_ = std::make_shared<const BchCode>(std::move(host));
  s.decoder_ = std::make_shared<CodeDecoder>(s.code_, s.bch_);
  return s;
}

std::size_t Construction1Scheme::guaranteed_capacity() const {
  const std::uint32_t q = code_->field->order();
  return std::min<std::size_t>(code_->n, (q - 1) / 2);
}

MaskedWord Construction1Scheme::encode(const Vec& m,
                                       const std::vector<std::size_t>& phi,
                                       Mode mode, Label x) const {
  const LinearCode& code = *code_;
  const Field& f = *code.field;
  check_stuck_set(phi, code.n);
  check_error_value(f, x);
  const std::size_t u = phi.size();
  if (mode == Mode::guaranteed) {
    if (u > guaranteed_capacity())
      throw TooManyStuckError("u exceeds min(n, floor((q-1)/2))");
  } else {
    if (u + 2 > f.order()) throw TooManyStuckError("u exceeds q-2");
  }
  if (m.size() != message_length())
    throw LengthMismatchError("message length != n - r - 1");

  Vec w(code.n, 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    for (std::size_t j = 0; j < code.n; ++j) {
      const Label g = code.G.at(i, j);
      if (g != 0) w[j] = f.add(w[j], f.mul(m[i], g));
    }
  }

  Vec stuck_values(u);
  for (std::size_t i = 0; i < u; ++i) stuck_values[i] = w[phi[i]];
  const auto pair_start = find_pair_start(f, stuck_values, x);
  if (!pair_start) {
    // Unreachable in guaranteed mode: the u values forbid at most
    // 2u <= q-1 < q pair starts.
    throw MaskingInfeasibleError(
        "no consecutive value pair avoids the stuck values");
  }
  const Label z0 = f.neg(static_cast<Label>((*pair_start + x) % f.order()));

  MaskedWord out;
  out.c.resize(code.n);
  for (std::size_t j = 0; j < code.n; ++j)
    out.c[j] = f.add(w[j], f.mul(z0, code.G.at(code.k - 1, j)));
  out.z = {z0};
  out.phi = phi;
  return out;
}

Vec Construction1Scheme::encode_with_coefficient(const Vec& m, Label z0) const {
  if (m.size() != message_length())
    throw LengthMismatchError("message length != n - r - 1");
  Vec full(m);
  full.push_back(z0);
  return code_->encode(full);
}

std::optional<Vec> Construction1Scheme::decode(const Vec& y, std::size_t t) const {
  auto dec = decoder_->decode(y, t);
  if (!dec) return std::nullopt;
  const Field& f = *code_->field;
  // The first column of G1 is zero and the all-one row starts with 1, so
  // coordinate 0 carries the masking coefficient.
  const Label z0 = dec->codeword[0];
  Vec m(message_length());
  for (std::size_t i = 0; i < m.size(); ++i)
    m[i] = f.sub(dec->codeword[i + 1], z0);
  return m;
}

Vec sequential_block_mask(const BlockPartition& partition, const MatrixFq& hmask,
                const Vec& w, const std::vector<std::size_t>& phi, Label x) {
  const Field& f = *hmask.field();
  require_prime_field(f, "block masking");
  check_error_value(f, x);
  if (w.size() != hmask.cols()) throw LengthMismatchError("word length mismatch");
  const std::uint32_t q = f.order();
  const Label hi_forbidden = static_cast<Label>(q - x);

  Vec z_stair(hmask.rows(), 0);
  if (!phi.empty()) {
    const MatrixFq& s = partition.staircase;
    std::vector<Label> acc(partition.phi.size());
    for (std::size_t idx = 0; idx < partition.phi.size(); ++idx)
      acc[idx] = w[partition.phi[idx]];
    std::vector<std::size_t> col_pos(hmask.cols(), 0);
    for (std::size_t idx = 0; idx < partition.phi.size(); ++idx)
      col_pos[partition.phi[idx]] = idx;

    for (const auto& blk : partition.blocks) {
      bool found = false;
      Label choice = 0;
      for (std::uint32_t cand = 0; cand < q && !found; ++cand) {
        bool ok = true;
        for (std::size_t c : blk.cols) {
          const Label v = f.add(f.mul(static_cast<Label>(cand), s.at(blk.row, c)),
                                acc[col_pos[c]]);
          if (v == 0 || v == hi_forbidden) {
            ok = false;
            break;
          }
        }
        if (ok) {
          choice = static_cast<Label>(cand);
          found = true;
        }
      }
      if (!found)
        throw NoFeasibleCoefficientError("no coefficient masks block " +
                                         std::to_string(blk.row));
      z_stair[blk.row] = choice;
      if (choice != 0) {
        for (std::size_t idx = 0; idx < partition.phi.size(); ++idx) {
          const Label h = s.at(blk.row, partition.phi[idx]);
          if (h != 0) acc[idx] = f.add(acc[idx], f.mul(choice, h));
        }
      }
    }
  }
  // Map the staircase-space coefficients back onto the given matrix rows.
  return mul_vec_mat(z_stair, partition.ops);
}

BlockMaskScheme::BlockMaskScheme(std::shared_ptr<const LinearCode> code,
                                 MatrixFq g1, MatrixFq hmask,
                                 std::optional<std::size_t> u_max,
                                 std::optional<std::size_t> d0)
    : code_(std::move(code)),
      g1_(std::move(g1)),
      hmask_(std::move(hmask)),
      stacked_(g1_.vstack(hmask_)),
      u_max_(u_max),
      d0_(d0) {
  require_prime_field(*code_->field, "block masking");
  if (rank_of(stacked_) != stacked_.rows())
    throw RankDeficientError("stacked generator is rank deficient");
  decoder_ = std::make_shared<CodeDecoder>(code_, nullptr);
}

std::size_t BlockMaskScheme::max_block_len() const {
  return (code_->field->order() - 1) / 2;
}

BlockMaskScheme BlockMaskScheme::construction2(LinearCode host, MatrixFq hmask) {
  if (hmask.cols() != host.n)
    throw LengthMismatchError("masking matrix width != n");
  for (std::size_t i = 0; i < hmask.rows(); ++i)
    if (!host.contains(hmask.row(i)))
      throw BadParamsError("masking row is not a codeword of the host code");
  if (rank_of(hmask) != hmask.rows())
    throw RankDeficientError("masking matrix is rank deficient");

  // Deterministic basis completion: greedily add host generator rows that
  // grow the rank of [Hmask; picked].
  MatrixFq current = hmask;
  std::vector<Vec> picked;
  for (std::size_t i = 0; i < host.k && current.rows() < host.k; ++i) {
    MatrixFq trial =
        current.vstack(MatrixFq::from_rows(host.field, {host.G.row(i)}));
    if (rank_of(trial) == trial.rows()) {
      picked.push_back(host.G.row(i));
      current = std::move(trial);
    }
  }
  if (current.rows() != host.k)
    throw RankDeficientError("masking rows do not extend to a basis");
  MatrixFq g1 = picked.empty() ? MatrixFq(host.field, 0, host.n)
                               : MatrixFq::from_rows(host.field, picked);
  return BlockMaskScheme(std::make_shared<const LinearCode>(std::move(host)),
                         std::move(g1), std::move(hmask), std::nullopt,
                         std::nullopt);
}

BlockMaskScheme BlockMaskScheme::construction3(LinearCode host, MatrixFq h0,
                                               std::size_t u,
                                               std::optional<std::size_t> d0) {
  const std::size_t l = h0.rows();
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j)
      if (h0.at(i, j) != (i == j ? 1 : 0))
        throw BadParamsError("masking matrix must be systematic");
  std::size_t dual_d;
  if (d0) {
    dual_d = *d0;
  } else {
    // Minimum distance of the code checked by H0.
    dual_d = min_distance_exhaustive(null_space(h0));
  }
  const std::uint32_t q = host.field->order();
  const std::size_t bound = (q - 1) / 2 + dual_d - 2;
  if (u > bound)
    throw DualDistanceTooSmallError("u exceeds floor((q-1)/2) + d0 - 2");
  BlockMaskScheme scheme = construction2(std::move(host), std::move(h0));
  scheme.u_max_ = u;
  scheme.d0_ = dual_d;
  return scheme;
}

BlockMaskScheme BlockMaskScheme::masking_only(MatrixFq hmask) {
  LinearCode code = code_from_generator(hmask, false);
  MatrixFq g1(hmask.field(), 0, hmask.cols());
  return BlockMaskScheme(std::make_shared<const LinearCode>(std::move(code)),
                         std::move(g1), std::move(hmask), std::nullopt,
                         std::nullopt);
}

MaskedWord BlockMaskScheme::encode(const Vec& m,
                                   const std::vector<std::size_t>& phi,
                                   Label x) const {
  check_stuck_set(phi, code_->n);
  if (m.size() != message_length())
    throw LengthMismatchError("message length != k - l");
  if (u_max_ && phi.size() > *u_max_)
    throw TooManyStuckError("u exceeds the construction bound");
  const Field& f = *code_->field;
  const Vec w = m.empty() ? Vec(code_->n, 0) : mul_vec_mat(m, g1_);
  const BlockPartition part = block_partition(hmask_, phi, max_block_len());
  const Vec z = sequential_block_mask(part, hmask_, w, phi, x);
  MaskedWord out;
  out.c = vec_add(f, w, mul_vec_mat(z, hmask_));
  out.z = z;
  out.phi = phi;
  return out;
}

std::optional<Vec> BlockMaskScheme::decode(const Vec& y, std::size_t t) const {
  auto dec = decoder_->decode(y, t);
  if (!dec) return std::nullopt;
  const Vec mz = solve_full_rank(stacked_, dec->codeword);
  return Vec(mz.begin(), mz.begin() + message_length());
}

void audit_block_masking(const BlockMaskScheme& scheme, std::size_t u,
                         std::size_t samples, std::uint64_t seed) {
  const std::size_t n = scheme.n();
  if (u > n) throw BadParamsError("u exceeds n");
  if (u == 0) return;
  if (samples == 0) {
    std::vector<std::size_t> phi(u);
    for (std::size_t i = 0; i < u; ++i) phi[i] = i;
    do {
      block_partition(scheme.masking_matrix(), phi, scheme.max_block_len());
    } while (next_combination(phi, n));
  } else {
    Rng rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
      const auto phi = sample_subset(rng, n, u);
      block_partition(scheme.masking_matrix(), phi, scheme.max_block_len());
    }
  }
}

Prop3Scheme::Prop3Scheme(LinearCode code, std::size_t u, std::size_t t)
    : code_(std::make_shared<const LinearCode>(std::move(code))), u_(u), t_(t) {
  validate();
  decoder_ = std::make_shared<CodeDecoder>(code_, nullptr);
}

Prop3Scheme::Prop3Scheme(BchCode bch, std::size_t u, std::size_t t)
    : code_(std::make_shared<const LinearCode>(bch.code)),
      bch_(std::make_shared<const BchCode>(std::move(bch))),
      u_(u),
      t_(t) {
  validate();
  decoder_ = std::make_shared<CodeDecoder>(code_, bch_);
}

void Prop3Scheme::validate() const {
  if (u_ + t_ >= code_->n) throw BadParamsError("need u + t < n");
  if (code_->distance_bound() < 2 * (u_ + t_) + 1)
    throw DistanceTooSmallError("need d >= 2(u+t)+1");
}

Vec Prop3Scheme::encode(const Vec& m, const std::vector<std::size_t>& phi) const {
  check_stuck_set(phi, code_->n);
  if (phi.size() > u_)
    throw TooManyStuckError("more stuck cells than provisioned");
  Vec c = code_->encode(m);
  for (std::size_t i : phi)
    if (c[i] == 0) c[i] = 1;  // artificial error: lift to the lowest writable level
  return c;
}

std::optional<Vec> Prop3Scheme::decode(const Vec& y) const {
  auto dec = decoder_->decode(y, u_ + t_);
  if (!dec) return std::nullopt;
  return solve_full_rank(code_->G, dec->codeword);
}

}  // namespace pdmc
