#pragma once

#include <map>
#include <optional>
#include <string>

#include "krasner/expansions.hpp"
#include "krasner/ideals.hpp"

namespace krasner {

/// Raw parse of an instance document: tables plus optional named subsets
/// and expansion tables, before any semantic validation.
struct InstanceData {
  RingTables tables;
  std::map<std::string, Subset> ideals;
  std::map<std::string, std::vector<std::pair<Subset, Subset>>> expansions;
};

/// Parses the JSON instance format. Fields: m, n, carrier (labels), zero,
/// optional one, h (sorted m-tuple key -> label list), k (sorted n-tuple
/// key -> label), optional ideals and expansions. Tuple keys join labels
/// with ',' in carrier order; every tuple must be present exactly once.
/// Throws kParse with a positioned message on malformed input.
InstanceData parse_instance(const std::string& text);
InstanceData load_instance_file(const std::string& path);

/// Fully validated instance: ring (null exactly when the axiom audit
/// failed), named hyperideals, and eagerly validated expansions. The
/// lattice is enumerated only when the file defines expansions.
struct LoadedInstance {
  RingPtr ring;
  AxiomReport report;
  std::map<std::string, Hyperideal> ideals;
  std::map<std::string, Expansion> expansions;
  std::optional<IdealLattice> lattice;
};

LoadedInstance validate_instance(const InstanceData& data);
LoadedInstance load_and_validate(const std::string& path);

/// Canonical serialization; loading the output reproduces the tables
/// verbatim (ideals/expansions included when provided).
std::string serialize_instance(
    const Ring& ring,
    const std::map<std::string, Subset>* ideals = nullptr,
    const std::map<std::string, std::vector<std::pair<Subset, Subset>>>* expansions = nullptr);

}  // namespace krasner
