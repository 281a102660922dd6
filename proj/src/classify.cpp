#include "krasner/classify.hpp"

#include <algorithm>

#include "krasner/iterate.hpp"

namespace krasner {

namespace {

void require_proper(const Hyperideal& Q, const char* predicate) {
  if (!Q.is_proper())
    throw Error(ErrorCode::kImproperIdeal,
                std::string(predicate) + " is defined for proper hyperideals only");
}

std::vector<SubProductInfo> annotated_sub_products(const RingPtr& ring,
                                                   std::span<const ElementId> elems, int u,
                                                   const Subset* Q, const Subset* deltaQ) {
  std::vector<SubProductInfo> out;
  int w = static_cast<int>(elems.size());
  std::vector<ElementId> chosen(static_cast<size_t>(u));
  for_all_position_subsets(w, u, [&](std::span<const int> pos) {
    for (int i = 0; i < u; ++i) chosen[static_cast<size_t>(i)] = elems[static_cast<size_t>(pos[static_cast<size_t>(i)])];
    SubProductInfo info;
    info.positions.assign(pos.begin(), pos.end());
    info.product = ring->iterated_mul(chosen);
    if (Q) info.in_target = Q->test(info.product);
    if (deltaQ) info.in_expanded = deltaQ->test(info.product);
    out.push_back(std::move(info));
  });
  return out;
}

// Shared sweep for the absorbing family. `accept` decides whether a
// hypothesis-matching tuple satisfies the conclusion, given its
// annotated sub-products.
template <typename Accept>
ClassificationReport absorbing_sweep(const Hyperideal& Q, int t, const Expansion* delta,
                                     bool weakly, const char* predicate, Accept&& accept) {
  require_proper(Q, predicate);
  const RingPtr& ring = Q.ring();
  ring->require_one(predicate);
  AbsorbingParams params = AbsorbingParams::make(*ring, t);
  int w = params.full_width();
  int u = params.sub_width();
  const Subset* deltaQ = delta ? &delta->apply(Q.members()) : nullptr;

  ClassificationReport rep;
  rep.predicate = predicate;
  rep.t = t;
  if (delta) rep.delta_name = delta->name();
  rep.passed = true;

  for_all_multisets(ring->size(), w, [&](std::span<const ElementId> tuple) -> bool {
    ElementId full = ring->iterated_mul(tuple);
    if (!Q.contains(full)) return true;
    if (weakly && full == ring->zero()) return true;
    auto subs = annotated_sub_products(ring, tuple, u, &Q.members(), deltaQ);
    if (accept(subs)) return true;
    rep.passed = false;
    rep.witness_tuple.assign(tuple.begin(), tuple.end());
    rep.witness_product = full;
    rep.sub_products = std::move(subs);
    return false;
  });
  return rep;
}

}  // namespace

std::vector<SubProductInfo> sub_products(const RingPtr& ring,
                                         std::span<const ElementId> elems, int u) {
  if (u < 1 || u > static_cast<int>(elems.size()))
    throw Error(ErrorCode::kArity, "sub-product width out of range");
  if (!ring->admissible_length(static_cast<size_t>(u)) || !ring->admissible_length(elems.size()))
    throw Error(ErrorCode::kArity, "tuple lengths must be of the form l(n-1)+1");
  return annotated_sub_products(ring, elems, u, nullptr, nullptr);
}

ClassificationReport is_delta_primary(const Hyperideal& Q, const Expansion& delta) {
  require_proper(Q, "n-ary delta-primary");
  const RingPtr& ring = Q.ring();
  ElementId one = ring->require_one("is_delta_primary");
  const Subset& deltaQ = delta.apply(Q.members());
  int n = ring->n();

  ClassificationReport rep;
  rep.predicate = "delta-primary";
  rep.delta_name = delta.name();
  rep.passed = true;

  // Position form, as for the n-ary primary test: every position whose
  // element escapes Q must have its identity-replacement product inside
  // delta(Q). With delta0 this is the prime test, with delta1 the primary
  // test.
  for_all_multisets(ring->size(), n, [&](std::span<const ElementId> tuple) -> bool {
    if (!Q.contains(ring->mul(tuple))) return true;
    std::vector<ElementId> replaced(tuple.begin(), tuple.end());
    for (int i = 0; i < n; ++i) {
      if (Q.contains(tuple[static_cast<size_t>(i)])) continue;
      replaced[static_cast<size_t>(i)] = one;
      bool hit = deltaQ.test(ring->mul(replaced));
      replaced[static_cast<size_t>(i)] = tuple[static_cast<size_t>(i)];
      if (!hit) {
        rep.passed = false;
        rep.witness_tuple.assign(tuple.begin(), tuple.end());
        rep.witness_product = ring->mul(tuple);
        rep.detail = "position " + std::to_string(i) +
                     " is outside Q and its identity-replacement product escapes delta(Q)";
        return false;
      }
    }
    return true;
  });
  return rep;
}

ClassificationReport is_tn_absorbing(const Hyperideal& Q, int t) {
  return absorbing_sweep(Q, t, nullptr, false, "tn-absorbing",
                         [](const std::vector<SubProductInfo>& subs) {
                           for (const auto& s : subs)
                             if (s.in_target) return true;
                           return false;
                         });
}

ClassificationReport is_tn_absorbing_delta_primary(const Hyperideal& Q, int t,
                                                   const Expansion& delta) {
  // Quantifying the paper's positional clause over all orderings of the
  // tuple: pass iff some sub-product is in Q, or at least two distinct
  // position subsets land in delta(Q).
  return absorbing_sweep(Q, t, &delta, false, "tn-absorbing-delta-primary",
                         [](const std::vector<SubProductInfo>& subs) {
                           int in_q = 0, in_delta = 0;
                           for (const auto& s : subs) {
                             in_q += s.in_target;
                             in_delta += s.in_expanded;
                           }
                           return in_q >= 1 || in_delta >= 2;
                         });
}

ClassificationReport is_tn_absorbing_delta_semiprimary(const Hyperideal& Q, int t,
                                                       const Expansion& delta) {
  return absorbing_sweep(Q, t, &delta, false, "tn-absorbing-delta-semiprimary",
                         [](const std::vector<SubProductInfo>& subs) {
                           for (const auto& s : subs)
                             if (s.in_expanded) return true;
                           return false;
                         });
}

ClassificationReport is_weakly_tn_absorbing_delta_semiprimary(const Hyperideal& Q, int t,
                                                              const Expansion& delta) {
  return absorbing_sweep(Q, t, &delta, true, "weakly-tn-absorbing-delta-semiprimary",
                         [](const std::vector<SubProductInfo>& subs) {
                           for (const auto& s : subs)
                             if (s.in_expanded) return true;
                           return false;
                         });
}

ClassificationReport is_strongly_variant(const IdealLattice& lattice, const Hyperideal& Q,
                                         int t, const Expansion& delta, bool weakly,
                                         int lattice_cap) {
  require_proper(Q, "strongly (t,n)-absorbing delta-semiprimary");
  Q.ring()->require_one("strongly (t,n)-absorbing delta-semiprimary");
  if (static_cast<int>(lattice.size()) > lattice_cap)
    throw Error(ErrorCode::kCapExceeded,
                "ideal lattice has " + std::to_string(lattice.size()) +
                    " members, above the strongly-variant cap " + std::to_string(lattice_cap));
  const RingPtr& ring = Q.ring();
  AbsorbingParams params = AbsorbingParams::make(*ring, t);
  int w = params.full_width();
  int u = params.sub_width();
  const Subset& deltaQ = delta.apply(Q.members());
  Subset zero_set = ring->singleton(ring->zero());

  ClassificationReport rep;
  rep.predicate = weakly ? "strongly-weakly-tn-absorbing-delta-semiprimary"
                         : "strongly-tn-absorbing-delta-semiprimary";
  rep.t = t;
  rep.delta_name = delta.name();
  rep.passed = true;

  int L = static_cast<int>(lattice.size());
  std::vector<Subset> sets(static_cast<size_t>(w));
  std::vector<Subset> chosen(static_cast<size_t>(u));
  for_all_multisets(L, w, [&](std::span<const ElementId> idx) -> bool {
    for (int i = 0; i < w; ++i) sets[static_cast<size_t>(i)] = lattice[static_cast<size_t>(idx[static_cast<size_t>(i)])].members();
    Subset prod = ring->iterated_mul_sets(sets);
    if (!Q.members().contains(prod)) return true;
    if (weakly && prod == zero_set) return true;
    bool ok = false;
    for_all_position_subsets(w, u, [&](std::span<const int> pos) {
      if (ok) return;
      for (int i = 0; i < u; ++i) chosen[static_cast<size_t>(i)] = sets[static_cast<size_t>(pos[static_cast<size_t>(i)])];
      if (deltaQ.contains(ring->iterated_mul_sets(chosen))) ok = true;
    });
    if (ok) return true;
    rep.passed = false;
    rep.witness_sets.assign(sets.begin(), sets.end());
    rep.detail = "ideal product set lies in Q with no sub-product set inside delta(Q)";
    return false;
  });
  return rep;
}

std::vector<std::vector<ElementId>> find_delta_tn_zeros(const Hyperideal& Q, int t,
                                                        const Expansion& delta) {
  require_proper(Q, "delta-(t,n)-zero search");
  const RingPtr& ring = Q.ring();
  ring->require_one("delta-(t,n)-zero search");
  AbsorbingParams params = AbsorbingParams::make(*ring, t);
  int w = params.full_width();
  int u = params.sub_width();
  const Subset& deltaQ = delta.apply(Q.members());

  std::vector<std::vector<ElementId>> zeros;
  for_all_multisets(ring->size(), w, [&](std::span<const ElementId> tuple) {
    if (ring->iterated_mul(tuple) != ring->zero()) return;
    auto subs = annotated_sub_products(ring, tuple, u, nullptr, &deltaQ);
    for (const auto& s : subs)
      if (s.in_expanded) return;
    zeros.emplace_back(tuple.begin(), tuple.end());
  });
  return zeros;
}

bool is_free_delta_tn_zero(const Hyperideal& Q, int t, const Expansion& delta,
                           std::span<const Hyperideal> ideals) {
  const RingPtr& ring = Q.ring();
  AbsorbingParams params = AbsorbingParams::make(*ring, t);
  int w = params.full_width();
  int u = params.sub_width();
  ring->require_one("free delta-(t,n)-zero test");
  if (static_cast<int>(ideals.size()) != w)
    throw Error(ErrorCode::kArity, "expected " + std::to_string(w) + " hyperideals");
  if (!Q.members().contains(ideal_product(ring, ideals)))
    throw Error(ErrorCode::kInvalidInput,
                "the ideal product set must be contained in Q for the free-zero test");
  const Subset& deltaQ = delta.apply(Q.members());

  std::vector<std::vector<int>> lists;
  for (const Hyperideal& I : ideals) lists.push_back(I.members().elements());
  bool free = true;
  std::vector<ElementId> chosen(static_cast<size_t>(u));
  for_all_choices(lists, [&](std::span<const ElementId> tuple) -> bool {
    if (ring->iterated_mul(tuple) != ring->zero()) return true;
    bool any_sub = false;
    for_all_position_subsets(w, u, [&](std::span<const int> pos) {
      if (any_sub) return;
      for (int i = 0; i < u; ++i) chosen[static_cast<size_t>(i)] = tuple[static_cast<size_t>(pos[static_cast<size_t>(i)])];
      if (deltaQ.test(ring->iterated_mul(chosen))) any_sub = true;
    });
    if (!any_sub) {
      free = false;  // found a delta-(t,n)-zero among the choice tuples
      return false;
    }
    return true;
  });
  return free;
}

std::vector<ClassificationReport> classify_all(const IdealLattice& lattice, const Hyperideal& Q,
                                               std::span<const int> t_values,
                                               std::span<const Expansion* const> deltas) {
  std::vector<ClassificationReport> out;
  if (!Q.is_proper()) {
    ClassificationReport rep;
    rep.predicate = "proper";
    rep.detail = "ideal equals the whole ring; the predicate family needs a proper hyperideal";
    out.push_back(std::move(rep));
    return out;
  }
  out.push_back(is_prime(Q));
  if (!Q.ring()->one()) {
    ClassificationReport rep;
    rep.predicate = "scalar-identity-missing";
    rep.detail = "the primary/absorbing classifier family needs a scalar identity";
    out.push_back(std::move(rep));
    return out;
  }
  out.push_back(is_primary(lattice, Q));
  bool first_t = true;
  for (int t : t_values) {
    out.push_back(is_tn_absorbing(Q, t));
    for (const Expansion* d : deltas) {
      if (first_t) out.push_back(is_delta_primary(Q, *d));
      out.push_back(is_tn_absorbing_delta_primary(Q, t, *d));
      out.push_back(is_tn_absorbing_delta_semiprimary(Q, t, *d));
      out.push_back(is_weakly_tn_absorbing_delta_semiprimary(Q, t, *d));
    }
    first_t = false;
  }
  return out;
}

}  // namespace krasner
