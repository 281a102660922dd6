#include "krasner/ideals.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

namespace krasner {

std::string ClassificationReport::render(const Ring& ring) const {
  std::ostringstream os;
  os << predicate;
  if (t > 0) os << "[t=" << t << "]";
  if (!delta_name.empty()) os << "[delta=" << delta_name << "]";
  os << ": " << (passed ? "pass" : "FAIL");
  if (!passed) {
    if (!witness_tuple.empty()) os << " witness " << ring.render_tuple(witness_tuple);
    if (!witness_sets.empty()) {
      os << " ideals (";
      for (size_t i = 0; i < witness_sets.size(); ++i) {
        if (i) os << ", ";
        os << ring.render_subset(witness_sets[i]);
      }
      os << ")";
    }
    if (witness_product) os << " product=" << ring.label(*witness_product);
    for (const auto& sp : sub_products) {
      os << "\n  positions [";
      for (size_t i = 0; i < sp.positions.size(); ++i) {
        if (i) os << ',';
        os << sp.positions[i];
      }
      os << "] -> " << ring.label(sp.product) << (sp.in_target ? " (in Q)" : "")
         << (sp.in_expanded ? " (in delta(Q))" : "");
    }
    if (!detail.empty()) os << "\n  " << detail;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Hyperideal recognition

ClassificationReport is_hyperideal(const RingPtr& ring, const Subset& subset) {
  ClassificationReport rep;
  rep.predicate = "hyperideal";
  if (subset.empty()) throw Error(ErrorCode::kEmptyArgument, "candidate subset is empty");
  int N = ring->size();
  int m = ring->m();
  int n = ring->n();

  if (!subset.test(ring->zero())) {
    rep.detail = "does not contain zero";
    return rep;
  }
  // Inverse closure.
  {
    std::vector<int> members = subset.elements();
    for (int e : members) {
      if (!subset.test(ring->neg(e))) {
        rep.witness_tuple = {e};
        rep.detail = "inverse not in subset";
        return rep;
      }
    }
  }
  // h-closure on m-tuples of members.
  {
    std::vector<int> members = subset.elements();
    std::vector<ElementId> tuple(static_cast<size_t>(m));
    std::vector<size_t> odo(static_cast<size_t>(m), 0);
    while (true) {
      bool sorted = true;
      for (int i = 1; i < m; ++i)
        if (members[odo[static_cast<size_t>(i - 1)]] > members[odo[static_cast<size_t>(i)]]) sorted = false;
      if (sorted) {
        for (int i = 0; i < m; ++i) tuple[static_cast<size_t>(i)] = members[odo[static_cast<size_t>(i)]];
        if (!subset.contains(ring->add(tuple))) {
          rep.witness_tuple = tuple;
          rep.detail = "hyper-sum escapes the subset: " + ring->render_subset(ring->add(tuple));
          return rep;
        }
      }
      int pos = m - 1;
      while (pos >= 0 && ++odo[static_cast<size_t>(pos)] == members.size()) odo[static_cast<size_t>(pos--)] = 0;
      if (pos < 0) break;
    }
  }
  // Absorption: k with one slot ranging over the subset; commutativity of
  // the stored table makes a single slot position sufficient.
  {
    std::vector<ElementId> args(static_cast<size_t>(n), 0);
    std::vector<int> members = subset.elements();
    bool done = false;
    std::vector<ElementId> outer(static_cast<size_t>(n - 1), 0);
    while (!done) {
      for (int q : members) {
        for (int i = 0; i < n - 1; ++i) args[static_cast<size_t>(i)] = outer[static_cast<size_t>(i)];
        args[static_cast<size_t>(n - 1)] = q;
        ElementId got = ring->mul(args);
        if (!subset.test(got)) {
          rep.witness_tuple = args;
          rep.witness_product = got;
          rep.detail = "k-multiple escapes the subset";
          return rep;
        }
      }
      int pos = n - 2;
      while (pos >= 0 && ++outer[static_cast<size_t>(pos)] == N) outer[static_cast<size_t>(pos--)] = 0;
      if (pos < 0) done = true;
    }
  }
  rep.passed = true;
  return rep;
}

Hyperideal as_hyperideal(const RingPtr& ring, const Subset& subset) {
  ClassificationReport rep = is_hyperideal(ring, subset);
  if (!rep.passed)
    throw Error(ErrorCode::kInvalidInput,
                "subset " + ring->render_subset(subset) + " is not a hyperideal: " + rep.detail);
  return Hyperideal(ring, subset);
}

// ---------------------------------------------------------------------------
// Generated ideals

Hyperideal generated_ideal(const RingPtr& ring, const Subset& gens) {
  ElementId one = ring->require_one("generated_ideal");
  (void)one;
  int N = ring->size();
  int n = ring->n();
  int m = ring->m();
  Subset cur(N);
  cur.set(ring->zero());
  cur |= gens;

  bool changed = true;
  while (changed) {
    changed = false;
    Subset next = cur;
    // k(r, g, 1^(n-2)) for every carrier element r and member g.
    {
      std::vector<int> members = cur.elements();
      for (int g : members) {
        for (ElementId r = 0; r < N; ++r) {
          std::vector<ElementId> args{r, g};
          args.resize(static_cast<size_t>(n), *ring->one());
          next.set(ring->mul(args));
        }
      }
    }
    // Hyper-sums of m-tuples of members and inverses.
    {
      std::vector<int> members = next.elements();
      for (int g : members) next.set(ring->neg(g));
      members = next.elements();
      std::vector<ElementId> tuple(static_cast<size_t>(m));
      std::vector<size_t> odo(static_cast<size_t>(m), 0);
      while (true) {
        bool nondecreasing = true;
        for (int i = 1; i < m; ++i)
          if (odo[static_cast<size_t>(i - 1)] > odo[static_cast<size_t>(i)]) nondecreasing = false;
        if (nondecreasing) {
          for (int i = 0; i < m; ++i) tuple[static_cast<size_t>(i)] = members[odo[static_cast<size_t>(i)]];
          next |= ring->add(tuple);
        }
        int pos = m - 1;
        while (pos >= 0 && ++odo[static_cast<size_t>(pos)] == members.size()) odo[static_cast<size_t>(pos--)] = 0;
        if (pos < 0) break;
      }
    }
    if (next != cur) {
      cur = next;
      changed = true;
    }
  }
  return Hyperideal(ring, cur);
}

// ---------------------------------------------------------------------------
// Lattice enumeration

namespace {

// Exhaustive 2^N filter; only called for small carriers.
std::vector<Subset> enumerate_exhaustive(const RingPtr& ring) {
  int N = ring->size();
  std::vector<Subset> found;
  for (uint64_t mask = 1; mask < (uint64_t{1} << N); ++mask) {
    if (!(mask & (uint64_t{1} << ring->zero()))) continue;
    Subset s(N);
    for (int e = 0; e < N; ++e)
      if (mask & (uint64_t{1} << e)) s.set(e);
    if (is_hyperideal(ring, s).passed) found.push_back(s);
  }
  return found;
}

// Closure-lattice BFS over joins of principal ideals; needs a scalar
// identity. Every ideal is a union of the principal ideals of its
// members, so joins of principals reach the whole lattice.
std::vector<Subset> enumerate_bfs(const RingPtr& ring) {
  ring->require_one("hyperideal lattice enumeration above the exhaustive cap");
  int N = ring->size();
  std::set<std::vector<uint64_t>> seen;  // placeholder ordering via elements()
  auto key = [](const Subset& s) {
    std::vector<uint64_t> k;
    for (int e : s.elements()) k.push_back(static_cast<uint64_t>(e));
    return k;
  };
  std::vector<Subset> frontier;
  std::vector<Subset> all;
  auto push = [&](const Subset& s) {
    auto k = key(s);
    if (seen.insert(k).second) {
      frontier.push_back(s);
      all.push_back(s);
    }
  };
  Subset zero(N);
  zero.set(ring->zero());
  push(zero);
  for (ElementId g = 0; g < N; ++g)
    push(generated_ideal(ring, Subset::single(N, g)).members());
  // Join closure.
  size_t next = 0;
  while (next < all.size()) {
    Subset base = all[next++];
    size_t count = all.size();
    for (size_t i = 0; i < count; ++i) {
      Subset u = base | all[i];
      if (u == base || u == all[i]) continue;
      if (seen.count(key(u))) continue;
      push(generated_ideal(ring, u).members());
    }
  }
  return all;
}

}  // namespace

IdealLattice IdealLattice::enumerate(const RingPtr& ring, LatticeOptions opts) {
  int N = ring->size();
  if (N > opts.hard_cap)
    throw Error(ErrorCode::kCapExceeded,
                "carrier size " + std::to_string(N) + " above the lattice enumeration cap " +
                    std::to_string(opts.hard_cap));
  std::vector<Subset> members;
  if (N <= opts.exhaustive_cap) {
    members = enumerate_exhaustive(ring);
  } else {
    members = enumerate_bfs(ring);
  }
  std::sort(members.begin(), members.end(),
            [](const Subset& a, const Subset& b) { return subset_order_less(a, b); });
  IdealLattice lat;
  lat.ring_ = ring;
  for (Subset& s : members) lat.ideals_.emplace_back(ring, std::move(s));
  return lat;
}

int IdealLattice::index_of(const Subset& members) const {
  for (size_t i = 0; i < ideals_.size(); ++i)
    if (ideals_[i].members() == members) return static_cast<int>(i);
  return -1;
}

std::vector<const Hyperideal*> IdealLattice::proper_ideals() const {
  std::vector<const Hyperideal*> out;
  for (const auto& ideal : ideals_)
    if (ideal.is_proper()) out.push_back(&ideal);
  return out;
}

// ---------------------------------------------------------------------------
// Prime / primary / radical

ClassificationReport is_prime(const Hyperideal& P) {
  if (!P.is_proper()) throw Error(ErrorCode::kImproperIdeal, "primality is defined for proper hyperideals");
  const RingPtr& ring = P.ring();
  ClassificationReport rep;
  rep.predicate = "n-ary-prime";
  if (auto cached = P.cached_prime()) {
    rep.passed = *cached;
    if (rep.passed) return rep;  // witnesses are recomputed below on failure
  }
  int N = ring->size();
  int n = ring->n();
  std::vector<ElementId> tuple(static_cast<size_t>(n), 0);
  bool pass = true;
  // Sorted tuples suffice: k is commutative and the conclusion is symmetric.
  auto scan = [&](auto&& self, int pos, ElementId lo) -> void {
    if (!pass) return;
    if (pos == n) {
      if (!P.contains(ring->mul(tuple))) return;
      for (int i = 0; i < n; ++i)
        if (P.contains(tuple[static_cast<size_t>(i)])) return;
      pass = false;
      rep.witness_tuple = tuple;
      rep.witness_product = ring->mul(tuple);
      rep.detail = "product lies in P but no factor does";
      return;
    }
    for (ElementId e = lo; e < N; ++e) {
      tuple[static_cast<size_t>(pos)] = e;
      self(self, pos + 1, e);
    }
  };
  scan(scan, 0, 0);
  rep.passed = pass;
  P.cache_prime(pass);
  return rep;
}

ClassificationReport is_primary(const IdealLattice& lattice, const Hyperideal& I) {
  if (!I.is_proper()) throw Error(ErrorCode::kImproperIdeal, "primary is defined for proper hyperideals");
  const RingPtr& ring = I.ring();
  ElementId one = ring->require_one("is_primary");
  ClassificationReport rep;
  rep.predicate = "n-ary-primary";
  Hyperideal rad = radical(lattice, I);
  int N = ring->size();
  int n = ring->n();
  std::vector<ElementId> tuple(static_cast<size_t>(n), 0);
  bool pass = true;
  auto scan = [&](auto&& self, int pos, ElementId lo) -> void {
    if (!pass) return;
    if (pos == n) {
      if (!I.contains(ring->mul(tuple))) return;
      for (int i = 0; i < n && pass; ++i) {
        if (I.contains(tuple[static_cast<size_t>(i)])) continue;
        std::vector<ElementId> replaced(tuple);
        replaced[static_cast<size_t>(i)] = one;
        if (!rad.contains(ring->mul(replaced))) {
          pass = false;
          rep.witness_tuple = tuple;
          rep.witness_product = ring->mul(tuple);
          rep.detail = "factor at position " + std::to_string(i) +
                       " is outside I and its identity-replacement product escapes rad(I)";
        }
      }
      return;
    }
    for (ElementId e = lo; e < N; ++e) {
      tuple[static_cast<size_t>(pos)] = e;
      self(self, pos + 1, e);
    }
  };
  scan(scan, 0, 0);
  rep.passed = pass;
  I.cache_primary(pass);
  return rep;
}

Hyperideal radical(const IdealLattice& lattice, const Hyperideal& I) {
  const RingPtr& ring = I.ring();
  Subset acc = ring->full_set();
  bool found = false;
  for (const Hyperideal& P : lattice.ideals()) {
    if (!P.is_proper()) continue;
    if (!P.members().contains(I.members())) continue;
    if (!is_prime(P).passed) continue;
    acc &= P.members();
    found = true;
  }
  if (!found) return Hyperideal(ring, ring->full_set());
  return Hyperideal(ring, acc);
}

bool radical_membership(const RingPtr& ring, ElementId g, const Hyperideal& I) {
  ElementId one = ring->require_one("radical_membership");
  int n = ring->n();
  // Padded powers k(g^(s), 1^(n-s)) for s = 1..n.
  std::vector<ElementId> args(static_cast<size_t>(n), one);
  for (int s = 1; s <= n; ++s) {
    args[static_cast<size_t>(s - 1)] = g;
    if (I.contains(ring->mul(args))) return true;
  }
  // Iterated powers k_(l)(g^(s)), s = l(n-1)+1; the sequence over a finite
  // carrier must cycle, which bounds the search exactly.
  std::vector<ElementId> step(static_cast<size_t>(n), g);
  Subset seen(ring->size());
  ElementId cur = g;
  while (!seen.test(cur)) {
    seen.set(cur);
    if (I.contains(cur)) return true;
    step[0] = cur;
    cur = ring->mul(step);
  }
  return I.contains(cur);
}

Subset ideal_product_sets(const RingPtr& ring, std::span<const Subset> sets) {
  return ring->iterated_mul_sets(sets);
}

Subset ideal_product(const RingPtr& ring, std::span<const Hyperideal> ideals) {
  std::vector<Subset> sets;
  sets.reserve(ideals.size());
  for (const Hyperideal& q : ideals) sets.push_back(q.members());
  return ideal_product_sets(ring, sets);
}

}  // namespace krasner
