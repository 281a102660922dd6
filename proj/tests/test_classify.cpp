#include "doctest.h"

#include "krasner/classify.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace krasner;
using testutil::as_set;
using testutil::fixture_ring;
using testutil::subset_of;

namespace {

struct Fixture {
  RingPtr ring;
  IdealLattice lattice;
  std::vector<Expansion> deltas;

  explicit Fixture(const char* name)
      : ring(fixture_ring(name)), lattice(IdealLattice::enumerate(ring)) {
    deltas.push_back(builtin_expansion(BuiltinExpansion::kIdentity, lattice));
    deltas.push_back(builtin_expansion(BuiltinExpansion::kRadical, lattice));
    deltas.push_back(builtin_expansion(BuiltinExpansion::kWholeRing, lattice));
  }

  const Hyperideal& ideal(std::initializer_list<const char*> labels) {
    int idx = lattice.index_of(subset_of(*ring, labels));
    REQUIRE(idx >= 0);
    return lattice[static_cast<size_t>(idx)];
  }
};

// Replays a failed absorbing-family witness through public operations.
void check_witness_replays(const Fixture& fx, const ClassificationReport& rep) {
  REQUIRE_FALSE(rep.passed);
  REQUIRE_FALSE(rep.witness_tuple.empty());
  REQUIRE(rep.witness_product.has_value());
  CHECK(fx.ring->iterated_mul(rep.witness_tuple) == *rep.witness_product);
  for (const SubProductInfo& sp : rep.sub_products) {
    std::vector<ElementId> chosen;
    for (int p : sp.positions) chosen.push_back(rep.witness_tuple[static_cast<size_t>(p)]);
    CHECK(fx.ring->iterated_mul(chosen) == sp.product);
  }
}

}  // namespace

TEST_CASE("sub_products") {
  Fixture z12h("z12modH");
  ElementId c2 = z12h.ring->element("2"), c3 = z12h.ring->element("3");
  auto subs = sub_products(z12h.ring, std::vector<ElementId>{c2, c2, c3}, 2);
  REQUIRE(subs.size() == 3);
  CHECK(subs[0].positions == std::vector<int>{0, 1});
  CHECK(z12h.ring->label(subs[0].product) == "4");  // 2*2
  CHECK(subs[1].positions == std::vector<int>{0, 2});
  CHECK(z12h.ring->label(subs[1].product) == "6");  // 2*3
  CHECK(subs[2].positions == std::vector<int>{1, 2});
  CHECK(z12h.ring->label(subs[2].product) == "6");

  // u = 1: the sub-products are the elements themselves
  auto singles = sub_products(z12h.ring, std::vector<ElementId>{c2, c3, c2}, 1);
  REQUIRE(singles.size() == 3);
  CHECK(singles[0].product == c2);
  CHECK(singles[1].product == c3);

  ElementId one = *z12h.ring->one();
  for (const auto& sp : sub_products(z12h.ring, std::vector<ElementId>{one, one, one}, 2))
    CHECK(sp.product == one);
}

TEST_CASE("delta-primary") {
  Fixture z4("z4");
  // primes pass with every expansion
  for (const Expansion& d : z4.deltas)
    CHECK(is_delta_primary(z4.ideal({"0", "2"}), d).passed);
  CHECK(is_delta_primary(z4.ideal({"0"}), z4.deltas[1]).passed);  // 2*2=0, 2 in rad(0)

  Fixture z12("z12");
  ClassificationReport rep = is_delta_primary(z12.ideal({"0", "6"}), z12.deltas[0]);
  CHECK_FALSE(rep.passed);
  CHECK(rep.witness_tuple == std::vector<ElementId>{2, 3});

  // primes pass across fixtures and expansions
  for (const char* name : {"z12modH", "z6", "z8", "z4n3", "z9m3"}) {
    Fixture fx(name);
    for (const Hyperideal& P : fx.lattice.ideals())
      if (P.is_proper() && is_prime(P).passed)
        for (const Expansion& d : fx.deltas) CHECK(is_delta_primary(P, d).passed);
  }
}

TEST_CASE("tn-absorbing") {
  Fixture z12("z12");
  for (int t : {1, 2, 3})
    CHECK(is_tn_absorbing(z12.ideal({"0", "2", "4", "6", "8", "10"}), t).passed);

  // verdicts agree with the ordered-tuple oracle (delta = identity makes
  // absorbing a semiprimary special case)
  for (const char* name : {"z4", "z6", "z8"}) {
    Fixture fx(name);
    for (const Hyperideal& Q : fx.lattice.ideals()) {
      if (!Q.is_proper()) continue;
      for (int t : {1, 2, 3}) {
        bool expected =
            oracle::semiprimary_ordered(*fx.ring, as_set(Q.members()), as_set(Q.members()), t,
                                        /*weakly=*/false);
        CHECK_MESSAGE(is_tn_absorbing(Q, t).passed == expected, name << " t=" << t);
      }
    }
  }
}

TEST_CASE("tn-absorbing delta-primary") {
  Fixture z12("z12");
  ClassificationReport rep = is_tn_absorbing_delta_primary(z12.ideal({"0"}), 2, z12.deltas[0]);
  CHECK_FALSE(rep.passed);
  CHECK(rep.witness_tuple == std::vector<ElementId>{2, 2, 3});
  check_witness_replays(z12, rep);

  // deltaR passes everything proper
  for (const Hyperideal& Q : z12.lattice.ideals())
    if (Q.is_proper())
      for (int t : {1, 2, 3}) CHECK(is_tn_absorbing_delta_primary(Q, t, z12.deltas[2]).passed);

  // delta-primary implies (t,n)-absorbing delta-primary for every t
  for (const char* name : {"z12modH", "z4", "z6", "z8", "z12", "z4n3"}) {
    Fixture fx(name);
    for (const Hyperideal& Q : fx.lattice.ideals()) {
      if (!Q.is_proper()) continue;
      for (const Expansion& d : fx.deltas) {
        if (!is_delta_primary(Q, d).passed) continue;
        for (int t : {1, 2, 3})
          CHECK_MESSAGE(is_tn_absorbing_delta_primary(Q, t, d).passed,
                        name << " " << d.name() << " t=" << t);
      }
    }
  }
}

TEST_CASE("semiprimary matches the ordered-tuple oracle") {
  for (const char* name : {"z4", "z8", "z12modH", "z4n3"}) {
    Fixture fx(name);
    for (const Hyperideal& Q : fx.lattice.ideals()) {
      if (!Q.is_proper()) continue;
      for (size_t di = 0; di < fx.deltas.size(); ++di) {
        for (int t : {1, 2}) {
          std::set<int> dq = as_set(fx.deltas[di].apply(Q.members()));
          CHECK(is_tn_absorbing_delta_semiprimary(Q, t, fx.deltas[di]).passed ==
                oracle::semiprimary_ordered(*fx.ring, as_set(Q.members()), dq, t, false));
          CHECK(is_weakly_tn_absorbing_delta_semiprimary(Q, t, fx.deltas[di]).passed ==
                oracle::semiprimary_ordered(*fx.ring, as_set(Q.members()), dq, t, true));
        }
      }
    }
  }
}

TEST_CASE("the paper fixture classification") {
  Fixture z12h("z12modH");
  const Hyperideal& Q = z12h.ideal({"0", "2", "4", "6"});
  CHECK(is_tn_absorbing_delta_semiprimary(Q, 2, z12h.deltas[1]).passed);
}

TEST_CASE("weakly separates from plain on Z8") {
  Fixture z8("z8");
  const Hyperideal& zero = z8.ideal({"0"});
  CHECK(is_weakly_tn_absorbing_delta_semiprimary(zero, 2, z8.deltas[0]).passed);
  ClassificationReport plain = is_tn_absorbing_delta_semiprimary(zero, 2, z8.deltas[0]);
  CHECK_FALSE(plain.passed);
  CHECK(plain.witness_tuple == std::vector<ElementId>{2, 2, 2});
  check_witness_replays(z8, plain);
}

TEST_CASE("implication chain over small fixtures") {
  for (const char* name : {"z4", "z6", "z8", "z12modH", "z4n3", "z9m3"}) {
    Fixture fx(name);
    for (const Hyperideal& Q : fx.lattice.ideals()) {
      if (!Q.is_proper()) continue;
      bool prime = is_prime(Q).passed;
      for (const Expansion& d : fx.deltas) {
        bool dprimary = is_delta_primary(Q, d).passed;
        if (prime) CHECK(dprimary);
        for (int t : {1, 2}) {
          bool tn_dprimary = is_tn_absorbing_delta_primary(Q, t, d).passed;
          bool semi = is_tn_absorbing_delta_semiprimary(Q, t, d).passed;
          bool weak = is_weakly_tn_absorbing_delta_semiprimary(Q, t, d).passed;
          if (dprimary) CHECK(tn_dprimary);
          if (tn_dprimary) CHECK(semi);
          if (semi) CHECK(weak);
        }
      }
    }
  }
}

TEST_CASE("monotone in the expansion") {
  for (const char* name : {"z4", "z8", "z12"}) {
    Fixture fx(name);
    for (const Hyperideal& Q : fx.lattice.ideals()) {
      if (!Q.is_proper()) continue;
      for (int t : {1, 2}) {
        for (size_t a = 0; a < fx.deltas.size(); ++a)
          for (size_t b = 0; b < fx.deltas.size(); ++b) {
            if (!fx.deltas[b].apply(Q.members()).contains(fx.deltas[a].apply(Q.members())))
              continue;
            if (is_tn_absorbing_delta_semiprimary(Q, t, fx.deltas[a]).passed)
              CHECK(is_tn_absorbing_delta_semiprimary(Q, t, fx.deltas[b]).passed);
          }
      }
    }
  }
}

TEST_CASE("strongly variant") {
  Fixture z4("z4");
  const Hyperideal& M = z4.ideal({"0", "2"});
  // deltaR accepts everything
  CHECK(is_strongly_variant(z4.lattice, M, 2, z4.deltas[2], false).passed);

  // hand-rolled oracle over all ideal triples for (Z4, M, t=2, delta0)
  auto strongly_oracle = [&](const Expansion& d, bool weakly) {
    for (size_t a = 0; a < z4.lattice.size(); ++a)
      for (size_t b = 0; b < z4.lattice.size(); ++b)
        for (size_t c = 0; c < z4.lattice.size(); ++c) {
          std::vector<Hyperideal> tri{z4.lattice[a], z4.lattice[b], z4.lattice[c]};
          Subset prod = ideal_product(z4.ring, tri);
          if (!M.members().contains(prod)) continue;
          if (weakly && prod == z4.ring->singleton(0)) continue;
          bool ok = false;
          for (int i = 0; i < 3 && !ok; ++i)
            for (int j = i + 1; j < 3 && !ok; ++j) {
              std::vector<Subset> pair{tri[static_cast<size_t>(i)].members(),
                                       tri[static_cast<size_t>(j)].members()};
              if (d.apply(M.members()).contains(z4.ring->mul_sets(pair))) ok = true;
            }
          if (!ok) return false;
        }
    return true;
  };
  for (size_t di = 0; di < z4.deltas.size(); ++di) {
    CHECK(is_strongly_variant(z4.lattice, M, 2, z4.deltas[di], false).passed ==
          strongly_oracle(z4.deltas[di], false));
    CHECK(is_strongly_variant(z4.lattice, M, 2, z4.deltas[di], true).passed ==
          strongly_oracle(z4.deltas[di], true));
  }

  // strongly implies the element form (elements generate principal ideals)
  Fixture z8("z8");
  for (const Hyperideal& Q : z8.lattice.ideals()) {
    if (!Q.is_proper()) continue;
    for (size_t di = 0; di < z8.deltas.size(); ++di) {
      if (is_strongly_variant(z8.lattice, Q, 2, z8.deltas[di], false).passed)
        CHECK(is_tn_absorbing_delta_semiprimary(Q, 2, z8.deltas[di]).passed);
    }
  }

  CHECK_THROWS_AS(is_strongly_variant(z8.lattice, z8.ideal({"0"}), 2, z8.deltas[0], false, 2),
                  Error);  // lattice cap refusal
}

TEST_CASE("delta-(t,n)-zeros") {
  Fixture z8("z8");
  auto zeros = find_delta_tn_zeros(z8.ideal({"0"}), 2, z8.deltas[0]);
  // brute-force expectation: sorted triples over {2,6} multiply to 0 with
  // no pair product in {0}
  std::vector<std::vector<ElementId>> expected;
  for (int a = 0; a < 8; ++a)
    for (int b = a; b < 8; ++b)
      for (int c = b; c < 8; ++c) {
        if ((a * b * c) % 8 != 0) continue;
        if ((a * b) % 8 == 0 || (a * c) % 8 == 0 || (b * c) % 8 == 0) continue;
        expected.push_back({a, b, c});
      }
  CHECK(zeros == expected);
  CHECK(std::find(zeros.begin(), zeros.end(), std::vector<ElementId>{2, 2, 2}) != zeros.end());

  // deltaR never has zeros
  for (const Hyperideal& Q : z8.lattice.ideals())
    if (Q.is_proper()) CHECK(find_delta_tn_zeros(Q, 2, z8.deltas[2]).empty());

  // zeros exist exactly when weakly holds and plain fails (weakly context)
  for (const char* name : {"z4", "z8", "z12", "z12modH"}) {
    Fixture fx(name);
    for (const Hyperideal& Q : fx.lattice.ideals()) {
      if (!Q.is_proper()) continue;
      for (size_t di = 0; di < fx.deltas.size(); ++di) {
        for (int t : {1, 2}) {
          if (!is_weakly_tn_absorbing_delta_semiprimary(Q, t, fx.deltas[di]).passed) continue;
          bool semi = is_tn_absorbing_delta_semiprimary(Q, t, fx.deltas[di]).passed;
          bool has_zeros = !find_delta_tn_zeros(Q, t, fx.deltas[di]).empty();
          CHECK(has_zeros == !semi);
        }
      }
    }
  }
}

TEST_CASE("free delta-(t,n)-zero") {
  Fixture z8("z8");
  const Hyperideal& I4 = z8.ideal({"0", "4"});
  const Hyperideal& zero = z8.ideal({"0"});

  // product {0,4}^3 = {0} is inside {0,4}; the zero triple (2,2,2) is not
  // drawn from these ideals, so freeness holds for delta0 at t=2
  std::vector<Hyperideal> tri{I4, I4, I4};
  CHECK(is_free_delta_tn_zero(I4, 2, z8.deltas[0], tri));

  // the whole ring contains (2,2,2), which is a delta0-(2,2)-zero of {0}
  std::vector<Hyperideal> big{z8.lattice[static_cast<size_t>(z8.lattice.index_of(z8.ring->full_set()))],
                              z8.ideal({"0", "2", "4", "6"}),
                              z8.ideal({"0", "2", "4", "6"})};
  // product set of (G, M, M) inside {0}? no; use Q = M with zero triples
  // (2,2,2) in (M,M,M), product {0,4,...}: check precondition first
  std::vector<Hyperideal> mmm{z8.ideal({"0", "2", "4", "6"}), z8.ideal({"0", "2", "4", "6"}),
                              z8.ideal({"0", "2", "4", "6"})};
  Subset prod = ideal_product(z8.ring, mmm);
  const Hyperideal& M = z8.ideal({"0", "2", "4", "6"});
  if (M.members().contains(prod))
    CHECK_FALSE(is_free_delta_tn_zero(zero, 2, z8.deltas[0], mmm));

  // deltaR: no zeros at all, hence free
  CHECK(is_free_delta_tn_zero(I4, 2, z8.deltas[2], tri));

  // containment precondition enforced
  CHECK_THROWS_AS(is_free_delta_tn_zero(zero, 2, z8.deltas[0], big), Error);
}

TEST_CASE("classify_all") {
  Fixture z12h("z12modH");
  std::vector<const Expansion*> deltas{&z12h.deltas[0], &z12h.deltas[1], &z12h.deltas[2]};
  std::vector<int> ts{1, 2};
  auto matrix = classify_all(z12h.lattice, z12h.ideal({"0", "2", "4", "6"}), ts, deltas);
  bool found = false;
  for (const auto& rep : matrix) {
    if (rep.predicate == "tn-absorbing-delta-semiprimary" && rep.t == 2 &&
        rep.delta_name == "delta1") {
      CHECK(rep.passed);
      found = true;
    }
  }
  CHECK(found);

  // zero ring: single refusal row
  Fixture zero("zero");
  auto rows = classify_all(zero.lattice, zero.lattice[0], ts,
                           std::vector<const Expansion*>{&zero.deltas[0]});
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].predicate == "proper");

  // deterministic: repeated runs give identical renderings
  auto matrix2 = classify_all(z12h.lattice, z12h.ideal({"0", "2", "4", "6"}), ts, deltas);
  REQUIRE(matrix.size() == matrix2.size());
  for (size_t i = 0; i < matrix.size(); ++i)
    CHECK(matrix[i].render(*z12h.ring) == matrix2[i].render(*z12h.ring));
}

TEST_CASE("identityless rings refuse the classifier family") {
  RingPtr rng = fixture_ring("rng2z8");
  IdealLattice lattice = IdealLattice::enumerate(rng);
  Expansion d0 = builtin_expansion(BuiltinExpansion::kIdentity, lattice);
  const Hyperideal* proper = nullptr;
  for (const Hyperideal& I : lattice.ideals())
    if (I.is_proper() && I.size() > 1) proper = &I;
  REQUIRE(proper != nullptr);
  CHECK_THROWS_AS(is_tn_absorbing_delta_semiprimary(*proper, 2, d0), Error);
  CHECK_NOTHROW(is_prime(*proper));
}
