#include "krasner/construct.hpp"

#include <algorithm>
#include <map>

#include "krasner/expansions.hpp"

namespace krasner {

// ---------------------------------------------------------------------------
// Quotient

QuotientRing QuotientRing::build(const Hyperideal& P) {
  const RingPtr& G = P.ring();
  int N = G->size();
  int m = G->m();
  int n = G->n();

  // Cosets are the distinct sets h(g, P, 0^(m-2)); they must partition G.
  std::vector<Subset> classes;
  std::vector<ElementId> class_of(static_cast<size_t>(N), -1);
  for (ElementId g = 0; g < N; ++g) {
    if (class_of[static_cast<size_t>(g)] >= 0) continue;
    std::vector<Subset> args;
    args.push_back(G->singleton(g));
    args.push_back(P.members());
    for (int i = 2; i < m; ++i) args.push_back(G->singleton(G->zero()));
    Subset coset = G->add_sets(args);
    if (!coset.test(g))
      throw Error(ErrorCode::kInternal, "coset of " + G->label(g) + " does not contain it");
    ElementId id = static_cast<ElementId>(classes.size());
    coset.for_each([&](int member) {
      if (class_of[static_cast<size_t>(member)] >= 0 && class_of[static_cast<size_t>(member)] != id)
        throw Error(ErrorCode::kInternal, "cosets of the modulus do not partition the carrier");
      class_of[static_cast<size_t>(member)] = id;
    });
    classes.push_back(std::move(coset));
  }
  // Re-check disjointness completely: every element's own coset must be the
  // class it was assigned to.
  for (ElementId g = 0; g < N; ++g) {
    std::vector<Subset> args;
    args.push_back(G->singleton(g));
    args.push_back(P.members());
    for (int i = 2; i < m; ++i) args.push_back(G->singleton(G->zero()));
    if (G->add_sets(args) != classes[static_cast<size_t>(class_of[static_cast<size_t>(g)])])
      throw Error(ErrorCode::kInternal, "coset map is not constant on cosets");
  }

  int Q = static_cast<int>(classes.size());
  RingTables tables;
  tables.m = m;
  tables.n = n;
  for (int c = 0; c < Q; ++c)
    tables.labels.push_back(G->label(classes[static_cast<size_t>(c)].first()) + "+P");
  tables.zero = class_of[static_cast<size_t>(G->zero())];
  tables.h = HyperOpTable(m, Q);
  tables.k = NaryOpTable(n, Q);

  // Induced tables, verified well-defined over every representative tuple.
  std::vector<std::vector<int>> reps(static_cast<size_t>(Q));
  for (int c = 0; c < Q; ++c) reps[static_cast<size_t>(c)] = classes[static_cast<size_t>(c)].elements();

  auto scan_classes = [&](int arity, auto&& handle) {
    std::vector<ElementId> cls(static_cast<size_t>(arity), 0);
    while (true) {
      bool sorted = true;
      for (int i = 1; i < arity; ++i)
        if (cls[static_cast<size_t>(i - 1)] > cls[static_cast<size_t>(i)]) sorted = false;
      if (sorted) handle(std::span<const ElementId>(cls));
      int pos = arity - 1;
      while (pos >= 0 && ++cls[static_cast<size_t>(pos)] == Q) cls[static_cast<size_t>(pos--)] = 0;
      if (pos < 0) break;
    }
  };

  scan_classes(m, [&](std::span<const ElementId> cls) {
    std::optional<Subset> expected;
    std::vector<size_t> odo(static_cast<size_t>(m), 0);
    std::vector<ElementId> tuple(static_cast<size_t>(m));
    while (true) {
      for (int i = 0; i < m; ++i)
        tuple[static_cast<size_t>(i)] = reps[static_cast<size_t>(cls[static_cast<size_t>(i)])][odo[static_cast<size_t>(i)]];
      Subset image(Q);
      G->add(tuple).for_each([&](int y) { image.set(class_of[static_cast<size_t>(y)]); });
      if (!expected) {
        expected = image;
      } else if (*expected != image) {
        throw Error(ErrorCode::kInternal,
                    "induced hyperoperation is ill-defined on coset tuple (non-ideal modulus?)");
      }
      int pos = m - 1;
      while (pos >= 0 &&
             ++odo[static_cast<size_t>(pos)] == reps[static_cast<size_t>(cls[static_cast<size_t>(pos)])].size())
        odo[static_cast<size_t>(pos--)] = 0;
      if (pos < 0) break;
    }
    tables.h.set_entry(cls, *expected);
  });

  scan_classes(n, [&](std::span<const ElementId> cls) {
    std::optional<ElementId> expected;
    std::vector<size_t> odo(static_cast<size_t>(n), 0);
    std::vector<ElementId> tuple(static_cast<size_t>(n));
    while (true) {
      for (int i = 0; i < n; ++i)
        tuple[static_cast<size_t>(i)] = reps[static_cast<size_t>(cls[static_cast<size_t>(i)])][odo[static_cast<size_t>(i)]];
      ElementId image = class_of[static_cast<size_t>(G->mul(tuple))];
      if (!expected) {
        expected = image;
      } else if (*expected != image) {
        throw Error(ErrorCode::kInternal,
                    "induced operation is ill-defined on coset tuple (non-ideal modulus?)");
      }
      int pos = n - 1;
      while (pos >= 0 &&
             ++odo[static_cast<size_t>(pos)] == reps[static_cast<size_t>(cls[static_cast<size_t>(pos)])].size())
        odo[static_cast<size_t>(pos--)] = 0;
      if (pos < 0) break;
    }
    tables.k.set_entry(cls, *expected);
  });

  AxiomReport report;
  RingPtr quotient = Ring::create(std::move(tables), &report);
  if (!quotient)
    throw Error(ErrorCode::kInternal, "quotient construction failed validation: " +
                                          report.first_failure()->name);

  QuotientRing out;
  out.base_ = G;
  out.quotient_ = quotient;
  out.modulus_ = P;
  out.coset_of_ = std::move(class_of);
  out.coset_members_ = std::move(classes);
  return out;
}

Subset QuotientRing::image_subset(const Subset& base_subset) const {
  Subset out(quotient_->size());
  base_subset.for_each([&](int e) { out.set(coset_of_[static_cast<size_t>(e)]); });
  return out;
}

Subset QuotientRing::preimage_subset(const Subset& quotient_subset) const {
  Subset out(base_->size());
  quotient_subset.for_each([&](int c) { out |= coset_members_[static_cast<size_t>(c)]; });
  return out;
}

// ---------------------------------------------------------------------------
// Product

ProductRing ProductRing::build(const std::vector<RingPtr>& factors, int size_cap) {
  if (factors.empty()) throw Error(ErrorCode::kInvalidInput, "product needs at least one factor");
  int m = factors[0]->m();
  int n = factors[0]->n();
  long long total = 1;
  for (const RingPtr& f : factors) {
    if (f->m() != m || f->n() != n)
      throw Error(ErrorCode::kInvalidInput, "product factors must share (m, n)");
    total *= f->size();
    if (total > size_cap)
      throw Error(ErrorCode::kCapExceeded,
                  "product carrier exceeds the size cap of " + std::to_string(size_cap));
  }
  int N = static_cast<int>(total);

  ProductRing out;
  out.factors_ = factors;
  out.strides_.assign(factors.size(), 1);
  for (size_t i = factors.size(); i-- > 1;)
    out.strides_[i - 1] = out.strides_[i] * factors[i]->size();

  RingTables tables;
  tables.m = m;
  tables.n = n;
  for (ElementId e = 0; e < N; ++e) {
    std::string label;
    ElementId rest = e;
    for (size_t i = 0; i < factors.size(); ++i) {
      if (i) label += '|';
      label += factors[i]->label(rest / out.strides_[i]);
      rest %= out.strides_[i];
    }
    tables.labels.push_back(label);
  }
  std::vector<ElementId> zero_parts, one_parts;
  bool has_one = true;
  for (const RingPtr& f : factors) {
    zero_parts.push_back(f->zero());
    if (f->one())
      one_parts.push_back(*f->one());
    else
      has_one = false;
  }
  auto pack_with = [&](std::span<const ElementId> parts) {
    ElementId e = 0;
    for (size_t i = 0; i < factors.size(); ++i) e += parts[i] * out.strides_[i];
    return e;
  };
  tables.zero = pack_with(zero_parts);
  if (has_one) tables.one = pack_with(one_parts);

  tables.h = HyperOpTable(m, N);
  tables.k = NaryOpTable(n, N);

  // Componentwise tables over sorted tuples.
  auto scan_sorted = [&](int arity, auto&& handle) {
    std::vector<ElementId> t(static_cast<size_t>(arity), 0);
    while (true) {
      handle(std::span<const ElementId>(t));
      int pos = arity - 1;
      while (pos >= 0 && t[static_cast<size_t>(pos)] == N - 1) --pos;
      if (pos < 0) break;
      ElementId v = ++t[static_cast<size_t>(pos)];
      for (int i = pos + 1; i < arity; ++i) t[static_cast<size_t>(i)] = v;
    }
  };

  scan_sorted(m, [&](std::span<const ElementId> t) {
    // Per-factor argument tuples.
    std::vector<Subset> images;
    for (size_t i = 0; i < factors.size(); ++i) {
      std::vector<ElementId> part(t.size());
      for (size_t j = 0; j < t.size(); ++j)
        part[j] = (t[j] / out.strides_[i]) % factors[i]->size();
      images.push_back(factors[i]->add(part));
    }
    // Cartesian product of the factor images.
    Subset entry(N);
    std::vector<std::vector<int>> lists;
    for (const Subset& s : images) lists.push_back(s.elements());
    std::vector<size_t> odo(lists.size(), 0);
    std::vector<ElementId> parts(lists.size());
    while (true) {
      for (size_t i = 0; i < lists.size(); ++i) parts[i] = lists[i][odo[i]];
      entry.set(pack_with(parts));
      size_t pos = lists.size();
      bool done = true;
      while (pos-- > 0) {
        if (++odo[pos] < lists[pos].size()) {
          done = false;
          break;
        }
        odo[pos] = 0;
      }
      if (done) break;
    }
    tables.h.set_entry(t, entry);
  });

  scan_sorted(n, [&](std::span<const ElementId> t) {
    std::vector<ElementId> parts(factors.size());
    for (size_t i = 0; i < factors.size(); ++i) {
      std::vector<ElementId> part(t.size());
      for (size_t j = 0; j < t.size(); ++j)
        part[j] = (t[j] / out.strides_[i]) % factors[i]->size();
      parts[i] = factors[i]->mul(part);
    }
    tables.k.set_entry(t, pack_with(parts));
  });

  AxiomReport report;
  RingPtr product = Ring::create(std::move(tables), &report);
  if (!product)
    throw Error(ErrorCode::kInternal,
                "product construction failed validation: " + report.first_failure()->name);
  out.product_ = product;
  return out;
}

ElementId ProductRing::pack(std::span<const ElementId> components) const {
  if (components.size() != factors_.size())
    throw Error(ErrorCode::kArity, "component count does not match factor count");
  ElementId e = 0;
  for (size_t i = 0; i < factors_.size(); ++i) e += components[i] * strides_[i];
  return e;
}

std::vector<ElementId> ProductRing::unpack(ElementId product_element) const {
  std::vector<ElementId> parts(factors_.size());
  for (size_t i = 0; i < factors_.size(); ++i) {
    parts[i] = product_element / strides_[i];
    product_element %= strides_[i];
  }
  return parts;
}

Subset ProductRing::product_subset(std::span<const Subset> components) const {
  if (components.size() != factors_.size())
    throw Error(ErrorCode::kArity, "component count does not match factor count");
  Subset out(product_->size());
  std::vector<std::vector<int>> lists;
  for (const Subset& s : components) lists.push_back(s.elements());
  std::vector<size_t> odo(lists.size(), 0);
  std::vector<ElementId> parts(lists.size());
  while (true) {
    for (size_t i = 0; i < lists.size(); ++i) parts[i] = lists[i][odo[i]];
    out.set(pack(parts));
    size_t pos = lists.size();
    bool done = true;
    while (pos-- > 0) {
      if (++odo[pos] < lists[pos].size()) {
        done = false;
        break;
      }
      odo[pos] = 0;
    }
    if (done) break;
  }
  return out;
}

Subset ProductRing::component_image(const Subset& product_subset, size_t factor) const {
  Subset out(factors_[factor]->size());
  product_subset.for_each([&](int e) {
    out.set((e / strides_[factor]) % factors_[factor]->size());
  });
  return out;
}

bool ProductRing::decompose(const Subset& product_subset, std::vector<Subset>* components) const {
  std::vector<Subset> comps;
  for (size_t i = 0; i < factors_.size(); ++i)
    comps.push_back(component_image(product_subset, i));
  if (product_subset != ProductRing::product_subset(comps)) return false;
  if (components) *components = std::move(comps);
  return true;
}

// ---------------------------------------------------------------------------
// Homomorphisms

Subset Homomorphism::image(const Subset& s) const {
  Subset out(target_->size());
  s.for_each([&](int e) { out.set(map_[static_cast<size_t>(e)]); });
  return out;
}

Subset Homomorphism::preimage(const Subset& s) const {
  Subset out(source_->size());
  for (ElementId e = 0; e < source_->size(); ++e)
    if (s.test(map_[static_cast<size_t>(e)])) out.set(e);
  return out;
}

Subset Homomorphism::kernel() const {
  return preimage(Subset::single(target_->size(), target_->zero()));
}

bool Homomorphism::surjective() const {
  return image(Subset::full(source_->size())).count() == target_->size();
}

ClassificationReport validate_homomorphism(const Homomorphism& f) {
  ClassificationReport rep;
  rep.predicate = "homomorphism";
  const RingPtr& G1 = f.source();
  const RingPtr& G2 = f.target();
  int N = G1->size();
  int m = G1->m();
  int n = G1->n();
  if (G2->m() != m || G2->n() != n) {
    rep.detail = "source and target arities differ";
    return rep;
  }

  // f(h1(a)) == h2(f(a)) on sorted tuples (both sides are symmetric).
  {
    std::vector<ElementId> t(static_cast<size_t>(m), 0);
    while (true) {
      Subset lhs = f.image(G1->add(t));
      std::vector<ElementId> mapped(t.size());
      for (size_t i = 0; i < t.size(); ++i) mapped[i] = f.apply(t[i]);
      const Subset& rhs = G2->add(mapped);
      if (lhs != rhs) {
        rep.witness_tuple = t;
        rep.detail = "hyperaddition not preserved: image " + G2->render_subset(lhs) +
                     " vs " + G2->render_subset(rhs);
        return rep;
      }
      int pos = m - 1;
      while (pos >= 0 && t[static_cast<size_t>(pos)] == N - 1) --pos;
      if (pos < 0) break;
      ElementId v = ++t[static_cast<size_t>(pos)];
      for (int i = pos + 1; i < m; ++i) t[static_cast<size_t>(i)] = v;
    }
  }
  {
    std::vector<ElementId> t(static_cast<size_t>(n), 0);
    while (true) {
      ElementId lhs = f.apply(G1->mul(t));
      std::vector<ElementId> mapped(t.size());
      for (size_t i = 0; i < t.size(); ++i) mapped[i] = f.apply(t[i]);
      ElementId rhs = G2->mul(mapped);
      if (lhs != rhs) {
        rep.witness_tuple = t;
        rep.detail = "operation not preserved: " + G2->label(lhs) + " vs " + G2->label(rhs);
        return rep;
      }
      int pos = n - 1;
      while (pos >= 0 && t[static_cast<size_t>(pos)] == N - 1) --pos;
      if (pos < 0) break;
      ElementId v = ++t[static_cast<size_t>(pos)];
      for (int i = pos + 1; i < n; ++i) t[static_cast<size_t>(i)] = v;
    }
  }
  rep.passed = true;
  ClassificationReport kernel_check = is_hyperideal(f.source(), f.kernel());
  rep.detail = std::string(f.surjective() ? "surjective" : "not surjective") +
               (kernel_check.passed ? "; kernel is a hyperideal" : "; kernel is NOT a hyperideal");
  if (!kernel_check.passed) rep.passed = false;
  return rep;
}

ClassificationReport is_delta_deltaprime_homomorphism(const Homomorphism& f,
                                                      const Expansion& delta_src,
                                                      const Expansion& delta_tgt,
                                                      const IdealLattice& target_lattice) {
  ClassificationReport rep;
  rep.predicate = "delta-delta'-homomorphism";
  rep.delta_name = delta_src.name() + "/" + delta_tgt.name();
  for (const Hyperideal& Q2 : target_lattice.ideals()) {
    Subset pre = f.preimage(Q2.members());
    Subset lhs = delta_src.apply(pre);
    Subset rhs = f.preimage(delta_tgt.apply(Q2.members()));
    if (lhs != rhs) {
      rep.witness_sets = {Q2.members()};
      rep.detail = "delta(f^-1(Q2)) = " + f.source()->render_subset(lhs) +
                   " but f^-1(delta'(Q2)) = " + f.source()->render_subset(rhs);
      return rep;
    }
  }
  rep.passed = true;
  return rep;
}

Hyperideal preimage_ideal(const Homomorphism& f, const Hyperideal& target_ideal) {
  return as_hyperideal(f.source(), f.preimage(target_ideal.members()));
}

Hyperideal image_ideal(const Homomorphism& f, const Hyperideal& source_ideal) {
  if (!f.surjective())
    throw Error(ErrorCode::kInvalidInput, "ideal image transport requires a surjective map");
  if (!source_ideal.members().contains(f.kernel()))
    throw Error(ErrorCode::kInvalidInput,
                "ideal image transport requires the ideal to contain the kernel");
  return as_hyperideal(f.target(), f.image(source_ideal.members()));
}

Homomorphism coset_map(const QuotientRing& q) {
  std::vector<ElementId> map(static_cast<size_t>(q.base()->size()));
  for (ElementId e = 0; e < q.base()->size(); ++e) map[static_cast<size_t>(e)] = q.coset_of(e);
  return Homomorphism(q.base(), q.quotient(), std::move(map));
}

Homomorphism projection_map(const ProductRing& p, size_t factor) {
  std::vector<ElementId> map(static_cast<size_t>(p.product()->size()));
  for (ElementId e = 0; e < p.product()->size(); ++e)
    map[static_cast<size_t>(e)] = p.unpack(e)[factor];
  return Homomorphism(p.product(), p.factors()[factor], std::move(map));
}

Homomorphism identity_map(const RingPtr& ring) {
  std::vector<ElementId> map(static_cast<size_t>(ring->size()));
  for (ElementId e = 0; e < ring->size(); ++e) map[static_cast<size_t>(e)] = e;
  return Homomorphism(ring, ring, std::move(map));
}

// ---------------------------------------------------------------------------
// Subhyperrings

std::vector<Subset> enumerate_subhyperrings(const RingPtr& ring, int cap) {
  int N = ring->size();
  if (N > cap)
    throw Error(ErrorCode::kCapExceeded,
                "subhyperring enumeration capped at carrier size " + std::to_string(cap));
  int m = ring->m();
  int n = ring->n();
  std::vector<Subset> out;
  for (uint64_t mask = 1; mask < (uint64_t{1} << N); ++mask) {
    if (!(mask & (uint64_t{1} << ring->zero()))) continue;
    Subset s(N);
    for (int e = 0; e < N; ++e)
      if (mask & (uint64_t{1} << e)) s.set(e);
    bool ok = true;
    std::vector<int> members = s.elements();
    for (int e : members)
      if (!s.test(ring->neg(e))) ok = false;
    if (!ok) continue;
    // closure under h and k on member tuples
    auto closed = [&](int arity, bool hyper) {
      std::vector<size_t> odo(static_cast<size_t>(arity), 0);
      std::vector<ElementId> tuple(static_cast<size_t>(arity));
      while (true) {
        bool nondecreasing = true;
        for (int i = 1; i < arity; ++i)
          if (odo[static_cast<size_t>(i - 1)] > odo[static_cast<size_t>(i)]) nondecreasing = false;
        if (nondecreasing) {
          for (int i = 0; i < arity; ++i) tuple[static_cast<size_t>(i)] = members[odo[static_cast<size_t>(i)]];
          if (hyper) {
            if (!s.contains(ring->add(tuple))) return false;
          } else {
            if (!s.test(ring->mul(tuple))) return false;
          }
        }
        int pos = arity - 1;
        while (pos >= 0 && ++odo[static_cast<size_t>(pos)] == members.size()) odo[static_cast<size_t>(pos--)] = 0;
        if (pos < 0) return true;
      }
    };
    if (!closed(m, true) || !closed(n, false)) continue;
    out.push_back(s);
  }
  return out;
}

SubringView build_subring(const RingPtr& ring, const Subset& carrier) {
  std::vector<int> members = carrier.elements();
  int S = static_cast<int>(members.size());
  SubringView view;
  view.to_base = std::vector<ElementId>(members.begin(), members.end());
  view.from_base.assign(static_cast<size_t>(ring->size()), -1);
  for (int i = 0; i < S; ++i) view.from_base[static_cast<size_t>(members[static_cast<size_t>(i)])] = i;

  RingTables tables;
  tables.m = ring->m();
  tables.n = ring->n();
  for (int e : members) tables.labels.push_back(ring->label(e));
  tables.zero = view.from_base[static_cast<size_t>(ring->zero())];
  tables.h = HyperOpTable(ring->m(), S);
  tables.k = NaryOpTable(ring->n(), S);

  auto scan_sorted = [&](int arity, auto&& handle) {
    std::vector<ElementId> idx(static_cast<size_t>(arity), 0);
    while (true) {
      handle(std::span<const ElementId>(idx));
      int pos = arity - 1;
      while (pos >= 0 && idx[static_cast<size_t>(pos)] == S - 1) --pos;
      if (pos < 0) break;
      ElementId v = ++idx[static_cast<size_t>(pos)];
      for (int i = pos + 1; i < arity; ++i) idx[static_cast<size_t>(i)] = v;
    }
  };
  scan_sorted(ring->m(), [&](std::span<const ElementId> idx) {
    std::vector<ElementId> base(idx.size());
    for (size_t i = 0; i < idx.size(); ++i) base[i] = view.to_base[static_cast<size_t>(idx[i])];
    Subset entry(S);
    ring->add(base).for_each([&](int y) {
      if (view.from_base[static_cast<size_t>(y)] < 0)
        throw Error(ErrorCode::kInvalidInput, "carrier is not closed under the hyperoperation");
      entry.set(view.from_base[static_cast<size_t>(y)]);
    });
    tables.h.set_entry(idx, entry);
  });
  scan_sorted(ring->n(), [&](std::span<const ElementId> idx) {
    std::vector<ElementId> base(idx.size());
    for (size_t i = 0; i < idx.size(); ++i) base[i] = view.to_base[static_cast<size_t>(idx[i])];
    ElementId y = ring->mul(base);
    if (view.from_base[static_cast<size_t>(y)] < 0)
      throw Error(ErrorCode::kInvalidInput, "carrier is not closed under the operation");
    tables.k.set_entry(idx, view.from_base[static_cast<size_t>(y)]);
  });

  AxiomReport report;
  view.subring = Ring::create(std::move(tables), &report);
  if (!view.subring)
    throw Error(ErrorCode::kInvalidInput,
                "carrier does not induce a valid subhyperring: " + report.first_failure()->name);
  return view;
}

}  // namespace krasner
