#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pdmc/channel.hpp"
#include "pdmc/schemes.hpp"

namespace pdmc {

enum class Construction { c1, c1_cor, c2, c3, prop3, baseline };

std::string construction_name(Construction c);
std::optional<Construction> parse_construction(const std::string& name);

// Aggregated outcome of a simulation campaign. Every trial is classified
// exactly once as success, masking failure, or decode failure; hazard_count
// tracks trials where some overlapped position read 0.
struct TrialReport {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::uint64_t masking_failures = 0;
  std::uint64_t decode_failures = 0;
  std::uint64_t hazard_count = 0;
  double mean_trial_usec = 0;  // diagnostics only; kept out of stable reports
};

struct TrialTrace {
  std::uint64_t index = 0;
  std::vector<std::size_t> phi;
  std::vector<std::size_t> psi;
  std::vector<Label> word;
  std::vector<Label> y;
  bool hazard = false;
  bool decoded_ok = false;
};

// A scheme ready to drive trials; exactly one member is set per kind.
struct SchemeBundle {
  Construction kind = Construction::c1;
  std::shared_ptr<const Construction1Scheme> c1;     // c1, c1_cor, baseline
  std::shared_ptr<const BlockMaskScheme> block;      // c2, c3
  std::shared_ptr<const Prop3Scheme> prop3;

  std::size_t n() const;
  std::size_t message_length() const;
  const FieldPtr& field() const;
};

struct SimulatorConfig {
  std::size_t u = 0;
  std::size_t t = 0;
  Label x = 1;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};

using TraceSink = std::function<void(const TrialTrace&)>;

// Per trial i (engine seeded with derive_seed(seed, i)): sample the stuck
// set, sample a message, encode, write, inject t errors of magnitude x,
// decode, compare. The baseline runs an unchecked write with a uniformly
// random masking coefficient.
TrialReport run_trials(const SchemeBundle& scheme, const SimulatorConfig& cfg,
                       const TraceSink& sink = {});

}  // namespace pdmc
