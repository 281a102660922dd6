#pragma once

#include "krasner/expansions.hpp"
#include "krasner/ideals.hpp"

namespace krasner {

/// Tuple widths for the (t,n)-absorbing family: full width t(n-1)+1 and
/// sub width (t-1)(n-1)+1; both admissible iterated-product lengths and
/// sub = full - (n-1).
struct AbsorbingParams {
  int t = 1;
  int n = 2;

  int full_width() const { return t * (n - 1) + 1; }
  int sub_width() const { return (t - 1) * (n - 1) + 1; }

  static AbsorbingParams make(const Ring& ring, int t) {
    if (t < 1) throw Error(ErrorCode::kInvalidInput, "t must be a positive integer");
    return AbsorbingParams{t, ring.n()};
  }
};

/// All k-products over u distinct positions of `elems` (values may repeat).
/// With u = 1 the products are the elements themselves.
std::vector<SubProductInfo> sub_products(const RingPtr& ring,
                                         std::span<const ElementId> elems, int u);

/// n-ary delta-primary: every n-product in Q has some position whose
/// element lies in Q or whose identity-replacement product lies in delta(Q).
ClassificationReport is_delta_primary(const Hyperideal& Q, const Expansion& delta);

/// (t,n)-absorbing: every full-width product in Q has a sub-width
/// sub-product in Q.
ClassificationReport is_tn_absorbing(const Hyperideal& Q, int t);

/// (t,n)-absorbing delta-primary. The positional clause of the defining
/// implication is quantified over all orderings of the tuple, which
/// reduces to: some sub-product lies in Q, or at least two distinct
/// position subsets have their products in delta(Q).
ClassificationReport is_tn_absorbing_delta_primary(const Hyperideal& Q, int t,
                                                   const Expansion& delta);

/// (t,n)-absorbing delta-semiprimary: every full-width product in Q has a
/// sub-product in delta(Q).
ClassificationReport is_tn_absorbing_delta_semiprimary(const Hyperideal& Q, int t,
                                                       const Expansion& delta);

/// Weakly variant: the hypothesis is restricted to nonzero full products.
ClassificationReport is_weakly_tn_absorbing_delta_semiprimary(const Hyperideal& Q, int t,
                                                              const Expansion& delta);

/// Strongly (weakly) variant: elements are replaced by hyperideals and
/// membership by containment of elementwise product sets. Quantifies over
/// the whole lattice; refuses lattices above `lattice_cap`.
ClassificationReport is_strongly_variant(const IdealLattice& lattice, const Hyperideal& Q,
                                         int t, const Expansion& delta, bool weakly,
                                         int lattice_cap = 32);

/// All delta-(t,n)-zeros of Q: sorted full-width tuples with product zero
/// and no sub-product in delta(Q). One canonical representative per
/// multiset.
std::vector<std::vector<ElementId>> find_delta_tn_zeros(const Hyperideal& Q, int t,
                                                        const Expansion& delta);

/// True iff no choice tuple from the ideals is a delta-(t,n)-zero of Q.
/// Requires the elementwise product set of the ideals to lie inside Q.
bool is_free_delta_tn_zero(const Hyperideal& Q, int t, const Expansion& delta,
                           std::span<const Hyperideal> ideals);

/// Full predicate matrix for reporting: per (t, delta) the whole
/// absorbing family, preceded by the delta-independent prime/primary
/// verdicts. An improper input yields a single refusal row.
std::vector<ClassificationReport> classify_all(const IdealLattice& lattice, const Hyperideal& Q,
                                               std::span<const int> t_values,
                                               std::span<const Expansion* const> deltas);

}  // namespace krasner
