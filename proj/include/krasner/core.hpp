#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "krasner/error.hpp"
#include "krasner/subset.hpp"

namespace krasner {

/// Carrier members are dense indices in [0, N); display labels live on the ring.
using ElementId = int;

/// Dense storage for a commutative arity-`ar` table: entries are kept on
/// sorted tuples only and looked up through a multiset rank.
class TupleIndex {
 public:
  TupleIndex() = default;
  TupleIndex(int arity, int carrier);

  int arity() const { return arity_; }
  int carrier() const { return carrier_; }
  size_t table_size() const { return size_; }

  /// Rank of a tuple after sorting; the inverse of `unrank`.
  size_t rank(std::span<const ElementId> tuple) const;
  std::vector<ElementId> unrank(size_t r) const;

 private:
  int arity_ = 0;
  int carrier_ = 0;
  size_t size_ = 0;
  std::vector<std::vector<uint64_t>> binom_;
};

/// m-ary hyperoperation table: sorted m-tuple -> nonempty subset.
class HyperOpTable {
 public:
  HyperOpTable() = default;
  HyperOpTable(int arity, int carrier);

  int arity() const { return index_.arity(); }
  int carrier() const { return index_.carrier(); }

  const Subset& at(std::span<const ElementId> tuple) const;
  void set_entry(std::span<const ElementId> tuple, Subset value);
  bool entry_assigned(std::span<const ElementId> tuple) const;

  /// Label of the first unassigned or empty entry, if any (load check).
  std::optional<std::vector<ElementId>> first_incomplete() const;

  const TupleIndex& index() const { return index_; }

 private:
  TupleIndex index_;
  std::vector<Subset> entries_;
  std::vector<char> assigned_;
};

/// n-ary operation table: sorted n-tuple -> element.
class NaryOpTable {
 public:
  NaryOpTable() = default;
  NaryOpTable(int arity, int carrier);

  int arity() const { return index_.arity(); }
  int carrier() const { return index_.carrier(); }

  ElementId at(std::span<const ElementId> tuple) const;
  void set_entry(std::span<const ElementId> tuple, ElementId value);
  bool entry_assigned(std::span<const ElementId> tuple) const;
  std::optional<std::vector<ElementId>> first_incomplete() const;

  const TupleIndex& index() const { return index_; }

 private:
  TupleIndex index_;
  std::vector<ElementId> entries_;
};

/// Witness for a failed structural check: the offending tuple, the two
/// evaluations that disagree (rendered), and the nesting/position
/// parameters needed to replay it through the public operations.
struct Witness {
  std::vector<ElementId> tuple;
  std::vector<int> positions;
  std::string lhs;
  std::string rhs;
  std::string note;
};

enum class CheckVerdict { kPass, kFail, kSkipped };

struct AxiomCheck {
  std::string name;
  CheckVerdict verdict = CheckVerdict::kPass;
  std::optional<Witness> witness;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (c.verdict != CheckVerdict::kPass) return false;
    return true;
  }
  const AxiomCheck* first_failure() const {
    for (const auto& c : checks)
      if (c.verdict != CheckVerdict::kPass) return &c;
    return nullptr;
  }
};

/// Unvalidated table bundle, as read from an instance file or assembled
/// by a construction. `Ring::create` turns it into a validated ring.
struct RingTables {
  std::vector<std::string> labels;
  int m = 2;
  int n = 2;
  ElementId zero = 0;
  std::optional<ElementId> one;  // declared scalar identity, if any
  HyperOpTable h;
  NaryOpTable k;

  int size() const { return static_cast<int>(labels.size()); }
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Validated, immutable commutative Krasner (m,n)-hyperring.
class Ring {
 public:
  /// Runs the full axiom audit. On success returns the ring; on failure
  /// returns null. `report`, when non-null, always receives the audit.
  static RingPtr create(RingTables tables, AxiomReport* report = nullptr);

  int size() const { return static_cast<int>(labels_.size()); }
  int m() const { return tables_.m; }
  int n() const { return tables_.n; }
  ElementId zero() const { return tables_.zero; }
  std::optional<ElementId> one() const { return tables_.one; }

  const std::string& label(ElementId e) const { return labels_[static_cast<size_t>(e)]; }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Index of a label; throws kInvalidInput on unknown labels.
  ElementId element(const std::string& label) const;

  /// Hyperaddition on elements.
  const Subset& add(std::span<const ElementId> tuple) const { return tables_.h.at(tuple); }
  /// n-ary multiplication on elements.
  ElementId mul(std::span<const ElementId> tuple) const { return tables_.k.at(tuple); }
  /// Unique hyperadditive inverse.
  ElementId neg(ElementId e) const { return negs_[static_cast<size_t>(e)]; }

  /// Hyperaddition extended to subsets: union of h over all choice tuples.
  /// Memoized per distinct argument list; safe for concurrent callers.
  Subset add_sets(std::span<const Subset> args) const;
  /// Elementwise image of k over choice tuples from n subsets.
  Subset mul_sets(std::span<const Subset> args) const;

  /// Left-nested iterated k over a list of length l(n-1)+1 (length 1
  /// returns the element itself).
  ElementId iterated_mul(std::span<const ElementId> elems) const;
  /// Iterated k on subsets, same admissible lengths.
  Subset iterated_mul_sets(std::span<const Subset> sets) const;
  /// k on s <= n elements padded with copies of the scalar identity.
  ElementId pad_mul(std::span<const ElementId> elems) const;

  /// True iff the list length is of the form l(n-1)+1.
  bool admissible_length(size_t len) const {
    return len >= 1 && (len - 1) % static_cast<size_t>(tables_.n - 1) == 0;
  }

  Subset singleton(ElementId e) const { return Subset::single(size(), e); }
  Subset full_set() const { return Subset::full(size()); }
  ElementId require_one(const char* op) const;

  const RingTables& tables() const { return tables_; }
  std::string render_subset(const Subset& s) const;
  std::string render_tuple(std::span<const ElementId> tuple) const;

  Ring(const Ring&) = delete;
  Ring& operator=(const Ring&) = delete;

 private:
  explicit Ring(RingTables tables);

  RingTables tables_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, ElementId> label_index_;
  std::vector<ElementId> negs_;

  mutable std::mutex memo_mutex_;
  mutable std::unordered_map<std::vector<Subset>, Subset, SubsetVecHash> add_memo_;
  mutable std::unordered_map<std::vector<Subset>, Subset, SubsetVecHash> mul_memo_;
};

/// Canonical m-ary hypergroup audit: commutativity, m-ary associativity,
/// neutral zero, unique inverses, reversibility. Each sub-check is named
/// in the report.
AxiomReport validate_canonical_hypergroup(const HyperOpTable& h, ElementId zero);

/// Full Krasner (m,n)-hyperring audit: the hypergroup checks plus n-ary
/// semigroup, commutativity of k, distributivity and zero absorption,
/// and the declared scalar identity when present.
AxiomReport validate_krasner(const RingTables& tables);

/// The unique e with k(g, e^(n-1)) = g for all g, or absent.
std::optional<ElementId> find_scalar_identity(const RingTables& tables);

/// Free-function form of Ring::add_sets for unvalidated tables (used by
/// the validator itself). No memoization.
Subset extend_hyperop_to_subsets(const HyperOpTable& h, std::span<const Subset> args);

}  // namespace krasner
