#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "krasner/ideals.hpp"

namespace krasner {

class QuotientRing;
class ProductRing;

/// Hyperideal expansion: an inflationary, monotone self-map of a fixed
/// ring's ideal lattice, realized as a total lookup table over the
/// enumerated lattice. Immutable after construction; evaluation is pure.
class Expansion {
 public:
  Expansion() = default;
  Expansion(std::string name, RingPtr ring,
            std::unordered_map<Subset, Subset, SubsetHash> table)
      : name_(std::move(name)), ring_(std::move(ring)), table_(std::move(table)) {}

  const std::string& name() const { return name_; }
  const RingPtr& ring() const { return ring_; }

  /// Image of an ideal; throws kInvalidInput when the ideal is not in the
  /// table (the table is total on the enumerated lattice).
  const Subset& apply(const Subset& ideal) const;
  Hyperideal apply(const Hyperideal& ideal) const;

  const std::unordered_map<Subset, Subset, SubsetHash>& table() const { return table_; }

 private:
  std::string name_;
  RingPtr ring_;
  std::unordered_map<Subset, Subset, SubsetHash> table_;
};

enum class BuiltinExpansion { kIdentity, kRadical, kWholeRing };

/// Reserved instance-file names: delta0, delta1, deltaR.
const char* builtin_expansion_name(BuiltinExpansion which);
Expansion builtin_expansion(BuiltinExpansion which, const IdealLattice& lattice);

/// Both expansion axioms over the full lattice: inflationary and monotone.
/// The report's witness carries the offending ideal (pair).
ClassificationReport validate_expansion(const IdealLattice& lattice, const Expansion& d);

/// Builds an expansion from explicit (ideal, image) pairs and validates it
/// eagerly; throws kInvalidInput when a pair is not ideal-to-ideal or the
/// table is partial, and reports axiom failures via the report.
Expansion expansion_from_pairs(const std::string& name, const IdealLattice& lattice,
                               const std::vector<std::pair<Subset, Subset>>& pairs,
                               ClassificationReport* axioms = nullptr);

/// delta_q on G/J: the image of I/J is delta(I)/J under the canonical
/// correspondence between ideals of G/J and ideals of G containing J.
Expansion quotient_expansion(const Expansion& delta, const QuotientRing& quotient,
                             const IdealLattice& quotient_lattice);

/// Componentwise expansion on a product ring; requires every enumerated
/// product ideal to decompose as a product of factor ideals.
Expansion product_expansion(const std::vector<const Expansion*>& factors,
                            const ProductRing& product,
                            const IdealLattice& product_lattice);

/// delta(P & Q) == delta(P) & delta(Q) over all ideal pairs.
ClassificationReport is_intersection_preserving(const IdealLattice& lattice, const Expansion& d);

/// delta(Q) = G holds only at Q = G.
bool has_P_property(const IdealLattice& lattice, const Expansion& d);

}  // namespace krasner
