#pragma once

#include <atomic>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "krasner/core.hpp"

namespace krasner {

/// Sub-product record attached to classifier witnesses: which positions
/// were selected, the resulting k-product, and where it landed.
struct SubProductInfo {
  std::vector<int> positions;
  ElementId product = -1;
  bool in_target = false;     // membership in Q
  bool in_expanded = false;   // membership in delta(Q)
};

/// Verdict for a hyperideal predicate, with a replayable witness on
/// failure. `sub_products` is populated by the absorbing-family checks
/// with every admissible sub-product of the offending tuple.
struct ClassificationReport {
  std::string predicate;
  int t = 0;
  std::string delta_name;
  bool passed = false;
  std::vector<ElementId> witness_tuple;
  std::vector<Subset> witness_sets;  // strongly-variant witnesses quantify ideals
  std::optional<ElementId> witness_product;
  std::vector<SubProductInfo> sub_products;
  std::string detail;

  std::string render(const Ring& ring) const;
};

/// Validated hyperideal: contains zero, h-closed, inverse-closed, and
/// absorbs k-multiplication in every position. Copies share the
/// write-once predicate cache.
class Hyperideal {
 public:
  Hyperideal() = default;
  Hyperideal(RingPtr ring, Subset members)
      : ring_(std::move(ring)), members_(std::move(members)),
        cache_(std::make_shared<Cache>()) {}

  const RingPtr& ring() const { return ring_; }
  const Subset& members() const { return members_; }
  bool contains(ElementId e) const { return members_.test(e); }
  int size() const { return members_.count(); }
  bool is_proper() const { return members_.count() < ring_->size(); }
  bool is_zero_ideal() const { return members_.count() == 1; }

  // Write-once flag cache; -1 unknown, else 0/1.
  std::optional<bool> cached_prime() const { return read(cache_->prime); }
  std::optional<bool> cached_primary() const { return read(cache_->primary); }
  void cache_prime(bool v) const { write(cache_->prime, v); }
  void cache_primary(bool v) const { write(cache_->primary, v); }

  bool operator==(const Hyperideal& o) const { return members_ == o.members_; }

 private:
  struct Cache {
    std::atomic<int> prime{-1};
    std::atomic<int> primary{-1};
  };
  static std::optional<bool> read(const std::atomic<int>& a) {
    int v = a.load(std::memory_order_relaxed);
    if (v < 0) return std::nullopt;
    return v != 0;
  }
  static void write(std::atomic<int>& a, bool v) {
    int expected = -1;
    a.compare_exchange_strong(expected, v ? 1 : 0, std::memory_order_relaxed);
  }

  RingPtr ring_;
  Subset members_;
  std::shared_ptr<Cache> cache_;
};

/// Decides the three hyperideal invariant families for an arbitrary
/// subset; failure carries the offending tuple.
ClassificationReport is_hyperideal(const RingPtr& ring, const Subset& subset);

/// Wraps a subset as a Hyperideal after checking it; throws kInvalidInput
/// if the subset is not a hyperideal.
Hyperideal as_hyperideal(const RingPtr& ring, const Subset& subset);

/// Least hyperideal containing `gens`: fixpoint under k-multiples,
/// hyper-sums and inverses. Requires a scalar identity.
Hyperideal generated_ideal(const RingPtr& ring, const Subset& gens);

struct LatticeOptions {
  int exhaustive_cap = 16;  // carriers up to this size use the 2^N filter
  int hard_cap = 64;        // refuse carriers beyond this
};

/// The complete hyperideal lattice of a ring, deterministically ordered
/// by size then bit pattern.
class IdealLattice {
 public:
  static IdealLattice enumerate(const RingPtr& ring, LatticeOptions opts = {});

  const std::vector<Hyperideal>& ideals() const { return ideals_; }
  size_t size() const { return ideals_.size(); }
  const Hyperideal& operator[](size_t i) const { return ideals_[i]; }
  /// Index of a member subset, or -1 when the subset is not an ideal.
  int index_of(const Subset& members) const;
  const RingPtr& ring() const { return ring_; }

  const Hyperideal& zero_ideal() const { return ideals_.front(); }
  std::vector<const Hyperideal*> proper_ideals() const;

 private:
  RingPtr ring_;
  std::vector<Hyperideal> ideals_;
};

/// n-ary prime test: a product of n elements in P forces a factor into P.
ClassificationReport is_prime(const Hyperideal& P);

/// n-ary primary test (needs the lattice for the radical).
ClassificationReport is_primary(const IdealLattice& lattice, const Hyperideal& I);

/// Intersection of all n-ary prime hyperideals containing I; the whole
/// ring when no prime contains I.
Hyperideal radical(const IdealLattice& lattice, const Hyperideal& I);

/// Power-membership characterization: some padded power k(g^(s), 1^(n-s))
/// with s <= n, or some iterated power k_(l)(g^(s)), lies in I. The
/// search stops when the power sequence cycles.
bool radical_membership(const RingPtr& ring, ElementId g, const Hyperideal& I);

/// Elementwise product set of l(n-1)+1 hyperideals.
Subset ideal_product(const RingPtr& ring, std::span<const Hyperideal> ideals);
Subset ideal_product_sets(const RingPtr& ring, std::span<const Subset> sets);

}  // namespace krasner
