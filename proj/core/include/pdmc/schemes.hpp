#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "pdmc/bch.hpp"
#include "pdmc/linear_code.hpp"
#include "pdmc/matrix.hpp"

namespace pdmc {

// Output of a masking encoder: codeword c, masking coefficients z (a single
// coefficient for the consecutive-pair construction), and the stuck set the
// encoder worked against. Every label at a stuck position lies in
// [1, q-1-x], so adding an error value in {0, x} can never read 0.
struct MaskedWord {
  Vec c;
  Vec z;
  std::vector<std::size_t> phi;
};

// Shared decode backend: syndrome table when the pattern count fits the
// budget, else the algebraic BCH decoder when a spec is attached. Tables are
// built once per radius and then shared read-only.
class CodeDecoder {
 public:
  CodeDecoder(std::shared_ptr<const LinearCode> code,
              std::shared_ptr<const BchCode> bch)
      : code_(std::move(code)), bch_(std::move(bch)) {}
  std::optional<Decoding> decode(const Vec& y, std::size_t t) const;

 private:
  std::shared_ptr<const LinearCode> code_;
  std::shared_ptr<const BchCode> bch_;
  mutable std::mutex mu_;
  mutable std::unordered_map<std::size_t, std::unique_ptr<BoundedDecoder>> tables_;
};

// Smallest label v such that both v and (v + x) mod q differ from every given
// stuck value; nullopt when no such pair exists. The returned pair start maps
// to the masking coefficient z0 = -(v + x).
std::optional<Label> find_pair_start(const Field& f, const Vec& stuck_values,
                                     Label x = 1);

// Consecutive-pair masking scheme on a code whose generator stacks
// G1 = [0 | I | P] over the all-one row. Encodes n-r-1 message symbols and
// keeps every stuck coordinate in [1, q-2]. Prime fields only: the
// consecutive-value argument runs on integer labels, which match field
// arithmetic exactly when q is prime.
class Construction1Scheme {
 public:
  enum class Mode { guaranteed, extended };

  // P = 0: pure redundancy, d = 1, masking-only use.
  static Construction1Scheme plain(FieldPtr field, std::size_t n, std::size_t r);
  // Row-reduces a host code containing the all-one word into the required
  // shape; rejects codes without it or without full rank on the leading k
  // coordinates.
  static Construction1Scheme from_code(LinearCode host);
  static Construction1Scheme from_bch(BchCode host);

  // guaranteed: u <= min(n, floor((q-1)/2)); a pair always exists.
  // extended: u <= q-2, throws MaskingInfeasibleError when no consecutive
  // pair avoids the stuck values.
  MaskedWord encode(const Vec& m, const std::vector<std::size_t>& phi,
                    Mode mode = Mode::guaranteed, Label x = 1) const;

  // Baseline fixture: applies the given masking coefficient with no
  // constraint search; used to measure how often unconstrained values break
  // the stuck-at rule.
  Vec encode_with_coefficient(const Vec& m, Label z0) const;

  // Error-corrects within radius t, strips the masking coefficient (carried
  // by coordinate 0), returns the message. Never sees phi.
  std::optional<Vec> decode(const Vec& y, std::size_t t) const;

  std::size_t n() const { return code_->n; }
  std::size_t r() const { return r_; }
  std::size_t message_length() const { return code_->k - 1; }
  const LinearCode& code() const { return *code_; }
  const FieldPtr& field() const { return code_->field; }
  std::size_t guaranteed_capacity() const;

 private:
  Construction1Scheme(std::shared_ptr<const LinearCode> code, std::size_t r,
                      std::shared_ptr<const BchCode> bch);
  std::shared_ptr<const LinearCode> code_;  // G = [G1; all-one]
  std::size_t r_;
  std::shared_ptr<const BchCode> bch_;
  std::shared_ptr<CodeDecoder> decoder_;
};

// Sequential per-block coefficient choice against a validated staircase
// partition. Returns z with w + z . Hmask holding labels in [1, q-1-x] at
// every phi position. Choices are made on the partition's staircase rows and
// mapped back through the tracked row operations, so a matrix already in
// staircase form gets the smallest-coefficient choice verbatim.
Vec sequential_block_mask(const BlockPartition& partition, const MatrixFq& hmask,
                const Vec& w, const std::vector<std::size_t>& phi, Label x = 1);

// Block-masking schemes: the all-one row is replaced by an l-row masking
// matrix whose phi-restriction must be staircase with blocks of length at
// most floor((q-1)/2). Encodes k-l message symbols where k is the host code
// dimension.
class BlockMaskScheme {
 public:
  // Masking rows must be codewords of the host; the message part G1 is a
  // deterministic basis completion inside the host code.
  static BlockMaskScheme construction2(LinearCode host, MatrixFq hmask);
  // Masking via a systematic parity-check matrix H0 whose dual code has
  // minimum distance d0; masks any u <= floor((q-1)/2) + d0 - 2 positions
  // with l <= 2*kappa redundancy rows. d0 computed exhaustively when not
  // supplied.
  static BlockMaskScheme construction3(LinearCode host, MatrixFq h0,
                                       std::size_t u,
                                       std::optional<std::size_t> d0 = std::nullopt);
  // No message rows: pure masking.
  static BlockMaskScheme masking_only(MatrixFq hmask);

  MaskedWord encode(const Vec& m, const std::vector<std::size_t>& phi,
                    Label x = 1) const;
  std::optional<Vec> decode(const Vec& y, std::size_t t) const;

  std::size_t n() const { return code_->n; }
  std::size_t message_length() const { return g1_.rows(); }
  std::size_t masking_redundancy() const { return hmask_.rows(); }
  std::size_t max_block_len() const;
  std::optional<std::size_t> max_maskable() const { return u_max_; }
  const LinearCode& code() const { return *code_; }
  const MatrixFq& masking_matrix() const { return hmask_; }
  const FieldPtr& field() const { return code_->field; }

 private:
  BlockMaskScheme(std::shared_ptr<const LinearCode> code, MatrixFq g1,
                  MatrixFq hmask, std::optional<std::size_t> u_max,
                  std::optional<std::size_t> d0);
  std::shared_ptr<const LinearCode> code_;  // spanned by [G1; Hmask]
  MatrixFq g1_;
  MatrixFq hmask_;
  MatrixFq stacked_;  // [G1; Hmask]
  std::optional<std::size_t> u_max_;  // construction3 bound
  std::optional<std::size_t> d0_;
  std::shared_ptr<CodeDecoder> decoder_;
};

// Checks that every (or a sampled set of) size-u stuck set passes the block
// partition for the scheme's masking matrix. samples = 0 runs the full
// C(n, u) sweep. Throws on the first failing set.
void audit_block_masking(const BlockMaskScheme& scheme, std::size_t u,
                         std::size_t samples = 0, std::uint64_t seed = 0);

// Direct-correction scheme: bump stuck-position zeros to 1 as artificial
// errors and let a code with d >= 2(u+t)+1 absorb them together with the
// channel errors.
class Prop3Scheme {
 public:
  Prop3Scheme(LinearCode code, std::size_t u, std::size_t t);
  Prop3Scheme(BchCode bch, std::size_t u, std::size_t t);

  Vec encode(const Vec& m, const std::vector<std::size_t>& phi) const;
  std::optional<Vec> decode(const Vec& y) const;

  std::size_t n() const { return code_->n; }
  std::size_t message_length() const { return code_->k; }
  std::size_t u() const { return u_; }
  std::size_t t() const { return t_; }
  const LinearCode& code() const { return *code_; }
  const FieldPtr& field() const { return code_->field; }

 private:
  void validate() const;
  std::shared_ptr<const LinearCode> code_;
  std::shared_ptr<const BchCode> bch_;
  std::size_t u_;
  std::size_t t_;
  std::shared_ptr<CodeDecoder> decoder_;
};

}  // namespace pdmc
