#include "pdmc/experiment.hpp"

#include <chrono>

namespace pdmc {

std::string construction_name(Construction c) {
  switch (c) {
    case Construction::c1: return "c1";
    case Construction::c1_cor: return "c1-cor";
    case Construction::c2: return "c2";
    case Construction::c3: return "c3";
    case Construction::prop3: return "prop3";
    case Construction::baseline: return "baseline";
  }
  return "?";
}

std::optional<Construction> parse_construction(const std::string& name) {
  if (name == "c1") return Construction::c1;
  if (name == "c1-cor") return Construction::c1_cor;
  if (name == "c2") return Construction::c2;
  if (name == "c3") return Construction::c3;
  if (name == "prop3") return Construction::prop3;
  if (name == "baseline") return Construction::baseline;
  return std::nullopt;
}

std::size_t SchemeBundle::n() const {
  if (c1) return c1->n();
  if (block) return block->n();
  return prop3->n();
}

std::size_t SchemeBundle::message_length() const {
  if (c1) return c1->message_length();
  if (block) return block->message_length();
  return prop3->message_length();
}

const FieldPtr& SchemeBundle::field() const {
  if (c1) return c1->field();
  if (block) return block->field();
  return prop3->field();
}

TrialReport run_trials(const SchemeBundle& scheme, const SimulatorConfig& cfg,
                       const TraceSink& sink) {
  const std::size_t n = scheme.n();
  const std::uint32_t q = scheme.field()->order();
  const std::size_t mlen = scheme.message_length();

  TrialReport report;
  report.trials = cfg.trials;
  const auto t0 = std::chrono::steady_clock::now();

  for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
    Rng rng(derive_seed(cfg.seed, trial));
    MemoryState mem = mem_new(n, q, cfg.u, rng);
    Vec m(mlen);
    for (auto& v : m) v = static_cast<Label>(bounded(rng, q));

    bool masking_failed = false;
    Vec word;
    switch (scheme.kind) {
      case Construction::c1:
      case Construction::c1_cor: {
        const auto mode = scheme.kind == Construction::c1
                              ? Construction1Scheme::Mode::guaranteed
                              : Construction1Scheme::Mode::extended;
        try {
          word = scheme.c1->encode(m, mem.phi, mode, cfg.x).c;
        } catch (const MaskingInfeasibleError&) {
          masking_failed = true;
        }
        break;
      }
      case Construction::baseline: {
        const Label z0 = static_cast<Label>(bounded(rng, q));
        word = scheme.c1->encode_with_coefficient(m, z0);
        break;
      }
      case Construction::c2:
      case Construction::c3: {
        try {
          word = scheme.block->encode(m, mem.phi, cfg.x).c;
        } catch (const BlockTooLongError&) {
          masking_failed = true;
        } catch (const NotBlockStaircaseError&) {
          masking_failed = true;
        }
        break;
      }
      case Construction::prop3: {
        word = scheme.prop3->encode(m, mem.phi);
        break;
      }
    }

    if (masking_failed) {
      ++report.masking_failures;
      if (sink) sink(TrialTrace{trial, mem.phi, {}, {}, {}, false, false});
      continue;
    }

    if (scheme.kind == Construction::baseline) {
      if (!write_unchecked(mem, word).empty()) masking_failed = true;
    } else {
      write(mem, word);  // the masking guarantee makes this succeed
    }

    const ReadResult read = corrupt(mem, cfg.t, rng, cfg.x);
    const bool hazard = !read.hazards.empty();
    if (hazard) ++report.hazard_count;

    std::optional<Vec> decoded;
    switch (scheme.kind) {
      case Construction::c1:
      case Construction::c1_cor:
      case Construction::baseline:
        decoded = scheme.c1->decode(read.y, cfg.t);
        break;
      case Construction::c2:
      case Construction::c3:
        decoded = scheme.block->decode(read.y, cfg.t);
        break;
      case Construction::prop3:
        decoded = scheme.prop3->decode(read.y);
        break;
    }
    const bool ok = decoded.has_value() && *decoded == m;

    if (masking_failed)
      ++report.masking_failures;
    else if (ok)
      ++report.successes;
    else
      ++report.decode_failures;

    if (sink)
      sink(TrialTrace{trial, mem.phi, read.event.psi, word, read.y, hazard, ok});
  }

  const auto t1 = std::chrono::steady_clock::now();
  if (cfg.trials > 0) {
    report.mean_trial_usec =
        std::chrono::duration<double, std::micro>(t1 - t0).count() /
        static_cast<double>(cfg.trials);
  }
  return report;
}

}  // namespace pdmc
