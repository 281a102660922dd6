#pragma once

#include <cstdint>
#include <map>

#include "krasner/classify.hpp"
#include "krasner/construct.hpp"

namespace krasner {

struct TheoremViolation {
  std::string config;    // replayable configuration description
  std::string detail;    // what failed
  std::string instance;  // serialized ring for replay
};

struct TheoremOutcome {
  std::string id;
  std::string statement;  // checked implication, in formula shorthand
  long long cases = 0;
  long long hypothesis_met = 0;
  long long conclusion_held = 0;
  double coverage = 1.0;  // < 1 when quantifiers were sampled
  std::vector<TheoremViolation> violations;
  std::vector<std::string> notes;
};

struct TheoremReport {
  std::vector<TheoremOutcome> outcomes;  // sorted by theorem id
  std::vector<std::string> strictness;   // semiprimary-but-not-prime configs
  long long generator_candidates = 0;
  long long generator_valid = 0;
  double wall_seconds = 0.0;  // excluded from canonical renderings

  long long total_violations() const;
  /// Deterministic text rendering, one block per theorem id.
  std::string render_text() const;
  /// Deterministic machine-readable summary (JSON).
  std::string to_json() const;
};

struct CorpusEntry {
  std::string id;
  RingPtr ring;
  std::vector<Expansion> extra_expansions;  // file-defined, already validated
};

struct HarnessOptions {
  std::vector<int> t_values = {1, 2, 3};
  uint64_t seed = 0;
  long long random_budget = 0;   // counterexample-search candidates
  int exhaustive_cap = 12;       // carrier bound for exhaustive str-family sweeps
  long long sample_size = 2048;  // per-quantifier sample when above the cap
  int strong_lattice_cap = 32;
  long long verdict_work_cap = 3'000'000;  // skip (ring, t) sweeps costlier than this
  bool build_derived = true;     // products, quotients, homomorphisms, subrings
};

/// Runs every encoded theorem over the corpus (plus derived structures
/// and random instances when budgeted). Deterministic given the seed.
TheoremReport run_theorem_suite(const std::vector<CorpusEntry>& corpus,
                                const HarnessOptions& opts);

struct GeneratorConfig {
  int max_carrier = 6;
};

/// Random-instance search: generates candidate tables, filters them by
/// the axiom audit, and runs the full suite on the survivors.
TheoremReport counterexample_search(const GeneratorConfig& config, long long budget,
                                    uint64_t seed);

}  // namespace krasner
