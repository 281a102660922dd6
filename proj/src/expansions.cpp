#include "krasner/expansions.hpp"

#include "krasner/construct.hpp"

namespace krasner {

const Subset& Expansion::apply(const Subset& ideal) const {
  auto it = table_.find(ideal);
  if (it == table_.end())
    throw Error(ErrorCode::kInvalidInput,
                "expansion '" + name_ + "' has no entry for " + ring_->render_subset(ideal));
  return it->second;
}

Hyperideal Expansion::apply(const Hyperideal& ideal) const {
  return Hyperideal(ring_, apply(ideal.members()));
}

const char* builtin_expansion_name(BuiltinExpansion which) {
  switch (which) {
    case BuiltinExpansion::kIdentity: return "delta0";
    case BuiltinExpansion::kRadical: return "delta1";
    case BuiltinExpansion::kWholeRing: return "deltaR";
  }
  return "";
}

Expansion builtin_expansion(BuiltinExpansion which, const IdealLattice& lattice) {
  const RingPtr& ring = lattice.ring();
  std::unordered_map<Subset, Subset, SubsetHash> table;
  for (const Hyperideal& I : lattice.ideals()) {
    switch (which) {
      case BuiltinExpansion::kIdentity:
        table.emplace(I.members(), I.members());
        break;
      case BuiltinExpansion::kRadical:
        table.emplace(I.members(), radical(lattice, I).members());
        break;
      case BuiltinExpansion::kWholeRing:
        table.emplace(I.members(), ring->full_set());
        break;
    }
  }
  return Expansion(builtin_expansion_name(which), ring, std::move(table));
}

ClassificationReport validate_expansion(const IdealLattice& lattice, const Expansion& d) {
  ClassificationReport rep;
  rep.predicate = "expansion";
  rep.delta_name = d.name();
  const RingPtr& ring = lattice.ring();
  for (const Hyperideal& I : lattice.ideals()) {
    const Subset& image = d.apply(I.members());
    if (lattice.index_of(image) < 0)
      throw Error(ErrorCode::kInvalidInput,
                  "expansion '" + d.name() + "' maps " + ring->render_subset(I.members()) +
                      " to the non-ideal " + ring->render_subset(image));
    if (!image.contains(I.members())) {
      rep.witness_sets = {I.members(), image};
      rep.detail = "not inflationary";
      return rep;
    }
  }
  for (const Hyperideal& I : lattice.ideals()) {
    for (const Hyperideal& J : lattice.ideals()) {
      if (!J.members().contains(I.members())) continue;
      if (!d.apply(J.members()).contains(d.apply(I.members()))) {
        rep.witness_sets = {I.members(), J.members()};
        rep.detail = "not monotone";
        return rep;
      }
    }
  }
  rep.passed = true;
  return rep;
}

Expansion expansion_from_pairs(const std::string& name, const IdealLattice& lattice,
                               const std::vector<std::pair<Subset, Subset>>& pairs,
                               ClassificationReport* axioms) {
  const RingPtr& ring = lattice.ring();
  std::unordered_map<Subset, Subset, SubsetHash> table;
  for (const auto& [from, to] : pairs) {
    if (lattice.index_of(from) < 0)
      throw Error(ErrorCode::kInvalidInput, "expansion '" + name + "': domain entry " +
                                                ring->render_subset(from) + " is not a hyperideal");
    if (lattice.index_of(to) < 0)
      throw Error(ErrorCode::kInvalidInput, "expansion '" + name + "': image entry " +
                                                ring->render_subset(to) + " is not a hyperideal");
    if (!table.emplace(from, to).second)
      throw Error(ErrorCode::kInvalidInput,
                  "expansion '" + name + "': duplicate entry for " + ring->render_subset(from));
  }
  if (table.size() != lattice.size())
    throw Error(ErrorCode::kInvalidInput,
                "expansion '" + name + "' must be total on the ideal lattice (" +
                    std::to_string(lattice.size()) + " ideals, got " +
                    std::to_string(table.size()) + " entries)");
  Expansion d(name, ring, std::move(table));
  ClassificationReport rep = validate_expansion(lattice, d);
  if (axioms) *axioms = rep;
  if (!rep.passed && !axioms)
    throw Error(ErrorCode::kInvalidInput, "expansion '" + name + "' violates the axioms: " + rep.detail);
  return d;
}

Expansion quotient_expansion(const Expansion& delta, const QuotientRing& quotient,
                             const IdealLattice& quotient_lattice) {
  std::unordered_map<Subset, Subset, SubsetHash> table;
  for (const Hyperideal& I : quotient_lattice.ideals()) {
    Subset pre = quotient.preimage_subset(I.members());
    if (!pre.contains(quotient.modulus().members()))
      throw Error(ErrorCode::kInternal,
                  "quotient ideal preimage does not contain the modulus (broken correspondence)");
    table.emplace(I.members(), quotient.image_subset(delta.apply(pre)));
  }
  return Expansion(delta.name() + "_q", quotient.quotient(), std::move(table));
}

Expansion product_expansion(const std::vector<const Expansion*>& factors,
                            const ProductRing& product,
                            const IdealLattice& product_lattice) {
  if (factors.size() != product.factors().size())
    throw Error(ErrorCode::kArity, "one expansion per product factor is required");
  std::unordered_map<Subset, Subset, SubsetHash> table;
  std::string name;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) name += "x";
    name += factors[i]->name();
  }
  for (const Hyperideal& I : product_lattice.ideals()) {
    std::vector<Subset> comps;
    if (!product.decompose(I.members(), &comps))
      throw Error(ErrorCode::kInternal,
                  "enumerated product ideal is not a product of factor ideals: " +
                      product.product()->render_subset(I.members()));
    std::vector<Subset> images;
    for (size_t i = 0; i < comps.size(); ++i) images.push_back(factors[i]->apply(comps[i]));
    table.emplace(I.members(), product.product_subset(images));
  }
  return Expansion(name, product.product(), std::move(table));
}

ClassificationReport is_intersection_preserving(const IdealLattice& lattice, const Expansion& d) {
  ClassificationReport rep;
  rep.predicate = "intersection-preserving";
  rep.delta_name = d.name();
  for (const Hyperideal& P : lattice.ideals()) {
    for (const Hyperideal& Q : lattice.ideals()) {
      Subset meet = P.members() & Q.members();
      // The meet of two hyperideals is a hyperideal, hence in the lattice.
      if (d.apply(meet) != (d.apply(P.members()) & d.apply(Q.members()))) {
        rep.witness_sets = {P.members(), Q.members()};
        rep.detail = "delta(P & Q) != delta(P) & delta(Q)";
        return rep;
      }
    }
  }
  rep.passed = true;
  return rep;
}

bool has_P_property(const IdealLattice& lattice, const Expansion& d) {
  const Subset full = lattice.ring()->full_set();
  for (const Hyperideal& Q : lattice.ideals()) {
    bool image_full = d.apply(Q.members()) == full;
    bool q_full = Q.members() == full;
    if (image_full != q_full) return false;
  }
  return true;
}

}  // namespace krasner
