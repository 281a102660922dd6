#include "doctest.h"

#include "krasner/ideals.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace krasner;
using testutil::as_set;
using testutil::fixture_ring;
using testutil::subset_of;

TEST_CASE("hyperideal recognition") {
  RingPtr z12h = fixture_ring("z12modH");
  CHECK(is_hyperideal(z12h, subset_of(*z12h, {"0", "2", "4", "6"})).passed);
  CHECK(is_hyperideal(z12h, subset_of(*z12h, {"0"})).passed);

  // {0,3} is not h-closed: 3+3 = {0,6}
  ClassificationReport rep = is_hyperideal(z12h, subset_of(*z12h, {"0", "3"}));
  CHECK_FALSE(rep.passed);
  REQUIRE(rep.witness_tuple.size() == 2);
  CHECK(rep.witness_tuple[0] == z12h->element("3"));
  CHECK(rep.witness_tuple[1] == z12h->element("3"));
  CHECK(oracle::hyper_sum(*z12h, {3, 3}) == std::set<int>{0, 5});  // indices of 0 and 6

  for (const char* name : {"z4", "z6", "z8", "z12", "zero", "rng2z8", "z4n3", "z9m3"}) {
    RingPtr ring = fixture_ring(name);
    CHECK(is_hyperideal(ring, ring->singleton(ring->zero())).passed);
    CHECK(is_hyperideal(ring, ring->full_set()).passed);
  }
  CHECK_THROWS_AS(is_hyperideal(z12h, Subset(6)), Error);
}

TEST_CASE("lattice enumeration matches the subset-filter oracle") {
  for (const char* name : {"z12modH", "z4", "z6", "z8", "z12", "zero", "rng2z8", "z4n3", "z9m3"}) {
    RingPtr ring = fixture_ring(name);
    IdealLattice lattice = IdealLattice::enumerate(ring);
    auto expected = oracle::enumerate_ideals(*ring);
    REQUIRE_MESSAGE(lattice.size() == expected.size(), name);
    for (const auto& S : expected) {
      Subset s(ring->size());
      for (int e : S) s.set(e);
      CHECK_MESSAGE(lattice.index_of(s) >= 0, name);
    }
  }
}

TEST_CASE("frozen lattices") {
  RingPtr z4 = fixture_ring("z4");
  IdealLattice l4 = IdealLattice::enumerate(z4);
  REQUIRE(l4.size() == 3);
  CHECK(l4[0].members() == subset_of(*z4, {"0"}));
  CHECK(l4[1].members() == subset_of(*z4, {"0", "2"}));
  CHECK(l4[2].members() == z4->full_set());

  RingPtr z12h = fixture_ring("z12modH");
  IdealLattice lh = IdealLattice::enumerate(z12h);
  REQUIRE(lh.size() == 6);
  CHECK(lh[0].members() == subset_of(*z12h, {"0"}));
  CHECK(lh[1].members() == subset_of(*z12h, {"0", "4"}));
  CHECK(lh[2].members() == subset_of(*z12h, {"0", "6"}));
  CHECK(lh[3].members() == subset_of(*z12h, {"0", "3", "6"}));
  CHECK(lh[4].members() == subset_of(*z12h, {"0", "2", "4", "6"}));
  CHECK(lh[5].members() == z12h->full_set());

  RingPtr zero = fixture_ring("zero");
  CHECK(IdealLattice::enumerate(zero).size() == 1);
}

TEST_CASE("exhaustive and closure-BFS enumeration agree") {
  for (const char* name : {"z12modH", "z4", "z8", "z12", "z4n3", "z9m3"}) {
    RingPtr ring = fixture_ring(name);
    IdealLattice exhaustive = IdealLattice::enumerate(ring);
    LatticeOptions bfs_opts;
    bfs_opts.exhaustive_cap = 1;  // force the BFS path
    IdealLattice bfs = IdealLattice::enumerate(ring, bfs_opts);
    REQUIRE_MESSAGE(exhaustive.size() == bfs.size(), name);
    for (size_t i = 0; i < exhaustive.size(); ++i)
      CHECK(exhaustive[i].members() == bfs[i].members());
  }
}

TEST_CASE("generated ideals") {
  RingPtr z12h = fixture_ring("z12modH");
  CHECK(generated_ideal(z12h, subset_of(*z12h, {"6"})).members() == subset_of(*z12h, {"0", "6"}));
  CHECK(generated_ideal(z12h, subset_of(*z12h, {"0"})).members() == subset_of(*z12h, {"0"}));
  CHECK(generated_ideal(z12h, subset_of(*z12h, {"1"})).members() == z12h->full_set());

  // first multiplication pass already yields <g> whenever the plain
  // multiple set is an ideal
  for (const char* name : {"z12modH", "z4", "z12", "z4n3"}) {
    RingPtr ring = fixture_ring(name);
    for (ElementId g = 0; g < ring->size(); ++g) {
      Subset multiples(ring->size());
      for (ElementId r = 0; r < ring->size(); ++r) {
        std::vector<ElementId> args{r, g};
        args.resize(static_cast<size_t>(ring->n()), *ring->one());
        multiples.set(ring->mul(args));
      }
      if (is_hyperideal(ring, multiples).passed)
        CHECK(generated_ideal(ring, ring->singleton(g)).members() == multiples);
    }
  }

  // least ideal containing the generators
  RingPtr z12 = fixture_ring("z12");
  IdealLattice lattice = IdealLattice::enumerate(z12);
  for (ElementId g = 0; g < z12->size(); ++g) {
    Subset gen = generated_ideal(z12, z12->singleton(g)).members();
    CHECK(lattice.index_of(gen) >= 0);
    for (const Hyperideal& I : lattice.ideals())
      if (I.contains(g)) CHECK(I.members().contains(gen));
  }

  CHECK_THROWS_AS(generated_ideal(fixture_ring("rng2z8"), Subset::single(4, 1)), Error);
}

TEST_CASE("prime recognition") {
  RingPtr z12h = fixture_ring("z12modH");
  IdealLattice lh = IdealLattice::enumerate(z12h);
  CHECK(is_prime(lh[static_cast<size_t>(lh.index_of(subset_of(*z12h, {"0", "2", "4", "6"})))]).passed);
  CHECK(is_prime(lh[static_cast<size_t>(lh.index_of(subset_of(*z12h, {"0", "3", "6"})))]).passed);
  CHECK_FALSE(is_prime(lh[0]).passed);

  RingPtr z4 = fixture_ring("z4");
  IdealLattice l4 = IdealLattice::enumerate(z4);
  CHECK(is_prime(l4[1]).passed);
  ClassificationReport rep = is_prime(l4[0]);
  CHECK_FALSE(rep.passed);
  CHECK(rep.witness_tuple == std::vector<ElementId>{2, 2});

  CHECK_THROWS_AS(is_prime(l4[2]), Error);  // P = G refused
}

TEST_CASE("primary recognition") {
  RingPtr z4 = fixture_ring("z4");
  IdealLattice l4 = IdealLattice::enumerate(z4);
  CHECK(is_primary(l4, l4[0]).passed);  // zero ideal of Z4

  RingPtr z12 = fixture_ring("z12");
  IdealLattice l12 = IdealLattice::enumerate(z12);
  ClassificationReport rep =
      is_primary(l12, l12[static_cast<size_t>(l12.index_of(subset_of(*z12, {"0", "6"})))]);
  CHECK_FALSE(rep.passed);
  CHECK(rep.witness_tuple == std::vector<ElementId>{2, 3});

  // prime implies primary across fixtures
  for (const char* name : {"z12modH", "z4", "z6", "z8", "z12", "z4n3", "z9m3"}) {
    RingPtr ring = fixture_ring(name);
    IdealLattice lattice = IdealLattice::enumerate(ring);
    for (const Hyperideal& P : lattice.ideals())
      if (P.is_proper() && is_prime(P).passed) CHECK(is_primary(lattice, P).passed);
  }
}

TEST_CASE("cached predicate flags are stable") {
  RingPtr z4 = fixture_ring("z4");
  IdealLattice l4 = IdealLattice::enumerate(z4);
  const Hyperideal& M = l4[1];
  CHECK_FALSE(M.cached_prime().has_value());
  bool first = is_prime(M).passed;
  REQUIRE(M.cached_prime().has_value());
  for (int i = 0; i < 3; ++i) CHECK(is_prime(M).passed == first);
  CHECK(*M.cached_prime() == first);
}

TEST_CASE("radical by prime intersection") {
  RingPtr z4 = fixture_ring("z4");
  IdealLattice l4 = IdealLattice::enumerate(z4);
  CHECK(radical(l4, l4[0]).members() == subset_of(*z4, {"0", "2"}));

  RingPtr z12h = fixture_ring("z12modH");
  IdealLattice lh = IdealLattice::enumerate(z12h);
  CHECK(radical(lh, lh[0]).members() == subset_of(*z12h, {"0", "6"}));

  // radical of a prime is the prime itself
  for (const char* name : {"z12modH", "z4", "z6", "z12"}) {
    RingPtr ring = fixture_ring(name);
    IdealLattice lattice = IdealLattice::enumerate(ring);
    for (const Hyperideal& P : lattice.ideals())
      if (P.is_proper() && is_prime(P).passed)
        CHECK(radical(lattice, P).members() == P.members());
  }

  // rad(G) = G, and rad over the zero ring is the whole (zero) ring
  RingPtr zero = fixture_ring("zero");
  IdealLattice lz = IdealLattice::enumerate(zero);
  CHECK(radical(lz, lz[0]).members() == zero->full_set());
}

TEST_CASE("radical properties: inflationary, monotone, idempotent") {
  for (const char* name : {"z12modH", "z4", "z6", "z8", "z12", "z4n3", "z9m3"}) {
    RingPtr ring = fixture_ring(name);
    IdealLattice lattice = IdealLattice::enumerate(ring);
    for (const Hyperideal& I : lattice.ideals()) {
      Hyperideal rad_i = radical(lattice, I);
      CHECK(rad_i.members().contains(I.members()));
      CHECK(radical(lattice, rad_i).members() == rad_i.members());
      for (const Hyperideal& J : lattice.ideals())
        if (J.members().contains(I.members()))
          CHECK(radical(lattice, J).members().contains(rad_i.members()));
    }
  }
}

TEST_CASE("power membership agrees with prime intersection") {
  // the two radical characterizations must coincide on every unital fixture
  for (const char* name : {"z12modH", "z2", "z3", "z4", "z6", "z8", "z12", "zero", "z4n3", "z9m3"}) {
    RingPtr ring = fixture_ring(name);
    IdealLattice lattice = IdealLattice::enumerate(ring);
    for (const Hyperideal& I : lattice.ideals()) {
      Subset by_primes = radical(lattice, I).members();
      Subset by_powers(ring->size());
      for (ElementId g = 0; g < ring->size(); ++g)
        if (radical_membership(ring, g, I)) by_powers.set(g);
      CHECK_MESSAGE(by_primes == by_powers, name);
    }
  }
}

TEST_CASE("radical membership examples") {
  RingPtr z12h = fixture_ring("z12modH");
  IdealLattice lh = IdealLattice::enumerate(z12h);
  const Hyperideal& zero_ideal = lh[0];
  CHECK(radical_membership(z12h, z12h->element("6"), zero_ideal));
  CHECK_FALSE(radical_membership(z12h, z12h->element("2"), zero_ideal));
  for (const Hyperideal& I : lh.ideals()) {
    std::vector<int> members;
    I.members().for_each([&](int e) { members.push_back(e); });
    for (int g : members) CHECK(radical_membership(z12h, g, I));
  }
  CHECK_THROWS_AS(
      radical_membership(fixture_ring("rng2z8"), 1,
                         Hyperideal(fixture_ring("rng2z8"), Subset::single(4, 0))),
      Error);
}

TEST_CASE("ideal product sets") {
  RingPtr z4 = fixture_ring("z4");
  IdealLattice l4 = IdealLattice::enumerate(z4);
  std::vector<Hyperideal> mmm{l4[1], l4[1], l4[1]};
  CHECK(ideal_product(z4, mmm) == subset_of(*z4, {"0"}));  // 2*2*2 = 0 mod 4

  // a zero factor absorbs everything
  std::vector<Hyperideal> with_zero{l4[0], l4[1], l4[2]};
  CHECK(ideal_product(z4, with_zero) == subset_of(*z4, {"0"}));

  // brute-force cross-check on the paper fixture
  RingPtr z12h = fixture_ring("z12modH");
  IdealLattice lh = IdealLattice::enumerate(z12h);
  const Hyperideal& Q = lh[static_cast<size_t>(lh.index_of(subset_of(*z12h, {"0", "2", "4", "6"})))];
  std::vector<Hyperideal> qqq{Q, Q, Q};
  Subset got = ideal_product(z12h, qqq);
  std::set<int> expected;
  for (int a : as_set(Q.members()))
    for (int b : as_set(Q.members()))
      for (int c : as_set(Q.members())) expected.insert(oracle::iterated(*z12h, {a, b, c}));
  CHECK(as_set(got) == expected);

  // order independence and monotonicity in each argument
  std::vector<Hyperideal> perm{Q, lh[1], lh[2]};
  std::vector<Hyperideal> perm2{lh[2], Q, lh[1]};
  CHECK(ideal_product(z12h, perm) == ideal_product(z12h, perm2));
  std::vector<Hyperideal> smaller{lh[0], lh[1], lh[2]};
  CHECK(ideal_product(z12h, perm).contains(ideal_product(z12h, smaller)));

  RingPtr z4n3 = fixture_ring("z4n3");
  IdealLattice l43 = IdealLattice::enumerate(z4n3);
  CHECK_THROWS_AS(ideal_product(z4n3, std::vector<Hyperideal>{l43[0], l43[1]}), Error);
}
