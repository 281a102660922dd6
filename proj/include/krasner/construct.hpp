#pragma once

#include <string>
#include <vector>

#include "krasner/ideals.hpp"

namespace krasner {

/// Quotient hyperring G/P with canonical least-representative cosets.
/// Coset labels are "<rep>+P".
class QuotientRing {
 public:
  static QuotientRing build(const Hyperideal& P);

  const RingPtr& base() const { return base_; }
  const RingPtr& quotient() const { return quotient_; }
  const Hyperideal& modulus() const { return modulus_; }

  /// Quotient element holding a base element.
  ElementId coset_of(ElementId base_element) const { return coset_of_[static_cast<size_t>(base_element)]; }
  /// Base-carrier members of a quotient element.
  const Subset& coset_members(ElementId quotient_element) const {
    return coset_members_[static_cast<size_t>(quotient_element)];
  }

  Subset image_subset(const Subset& base_subset) const;
  Subset preimage_subset(const Subset& quotient_subset) const;

 private:
  RingPtr base_;
  RingPtr quotient_;
  Hyperideal modulus_;
  std::vector<ElementId> coset_of_;
  std::vector<Subset> coset_members_;
};

/// Finite cartesian product with componentwise tables; element labels are
/// factor labels joined with '|'.
class ProductRing {
 public:
  static ProductRing build(const std::vector<RingPtr>& factors, int size_cap = 64);

  const std::vector<RingPtr>& factors() const { return factors_; }
  const RingPtr& product() const { return product_; }

  ElementId pack(std::span<const ElementId> components) const;
  std::vector<ElementId> unpack(ElementId product_element) const;

  Subset product_subset(std::span<const Subset> components) const;
  Subset component_image(const Subset& product_subset, size_t factor) const;

  /// Splits a product-ring subset into factor subsets; false when the
  /// subset is not a full cartesian product of its component images.
  bool decompose(const Subset& product_subset, std::vector<Subset>* components) const;

 private:
  std::vector<RingPtr> factors_;
  RingPtr product_;
  std::vector<int> strides_;
};

/// Total map between carriers preserving h setwise and k pointwise.
class Homomorphism {
 public:
  Homomorphism(RingPtr source, RingPtr target, std::vector<ElementId> map)
      : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {}

  const RingPtr& source() const { return source_; }
  const RingPtr& target() const { return target_; }
  ElementId apply(ElementId e) const { return map_[static_cast<size_t>(e)]; }

  Subset image(const Subset& s) const;
  Subset preimage(const Subset& s) const;
  Subset kernel() const;  // preimage of {0}
  bool surjective() const;

 private:
  RingPtr source_;
  RingPtr target_;
  std::vector<ElementId> map_;
};

/// Checks both preservation laws on all tuples; the report notes
/// surjectivity and whether the kernel is a hyperideal.
ClassificationReport validate_homomorphism(const Homomorphism& f);

/// delta(f^-1(Q2)) == f^-1(delta'(Q2)) for every hyperideal Q2 of the target.
ClassificationReport is_delta_deltaprime_homomorphism(const Homomorphism& f,
                                                      const class Expansion& delta_src,
                                                      const class Expansion& delta_tgt,
                                                      const IdealLattice& target_lattice);

/// Set-theoretic preimage, verified to be a hyperideal of the source.
Hyperideal preimage_ideal(const Homomorphism& f, const Hyperideal& target_ideal);

/// Image under a surjective map of an ideal containing the kernel;
/// refuses other inputs.
Hyperideal image_ideal(const Homomorphism& f, const Hyperideal& source_ideal);

/// The natural surjection G -> G/P.
Homomorphism coset_map(const QuotientRing& q);

/// Projection of a product onto one factor.
Homomorphism projection_map(const ProductRing& p, size_t factor);

/// Identity on a ring.
Homomorphism identity_map(const RingPtr& ring);

/// All subhyperrings (subsets closed under h, inverses and k, containing
/// zero) of a small carrier; throws kCapExceeded above the cap.
std::vector<Subset> enumerate_subhyperrings(const RingPtr& ring, int cap = 8);

/// The restriction of the ring structure to a subhyperring carrier.
struct SubringView {
  RingPtr subring;                  // validated ring on the sub-carrier
  std::vector<ElementId> to_base;   // subring element -> base element
  std::vector<ElementId> from_base; // base element -> subring element or -1
};
SubringView build_subring(const RingPtr& ring, const Subset& carrier);

}  // namespace krasner
