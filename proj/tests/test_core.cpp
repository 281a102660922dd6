#include "doctest.h"

#include <algorithm>
#include <random>

#include "krasner/core.hpp"
#include "krasner/iterate.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace krasner;
using testutil::fixture_ring;
using testutil::subset_of;

TEST_CASE("multiset ranking is a bijection") {
  for (auto [arity, carrier] : {std::pair{2, 6}, {3, 4}, {2, 12}, {4, 3}}) {
    TupleIndex idx(arity, carrier);
    std::vector<char> seen(idx.table_size(), 0);
    for (size_t r = 0; r < idx.table_size(); ++r) {
      std::vector<ElementId> t = idx.unrank(r);
      CHECK(std::is_sorted(t.begin(), t.end()));
      CHECK(idx.rank(t) == r);
      seen[r] = 1;
    }
    CHECK(std::count(seen.begin(), seen.end(), 1) == static_cast<long>(idx.table_size()));
  }
}

TEST_CASE("table lookups are order-insensitive") {
  RingPtr z12h = fixture_ring("z12modH");
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<ElementId> t{static_cast<int>(rng() % 6), static_cast<int>(rng() % 6)};
    std::vector<ElementId> p = t;
    std::swap(p[0], p[1]);
    CHECK(z12h->add(t) == z12h->add(p));
    CHECK(z12h->mul(t) == z12h->mul(p));
  }
}

TEST_CASE("subset extension examples") {
  RingPtr z4 = fixture_ring("z4");
  // singleton-valued h reduces to setwise addition
  std::vector<Subset> args{subset_of(*z4, {"0", "2"}), subset_of(*z4, {"1"})};
  CHECK(z4->add_sets(args) == subset_of(*z4, {"1", "3"}));

  RingPtr z12h = fixture_ring("z12modH");
  std::vector<Subset> ones{subset_of(*z12h, {"1"}), subset_of(*z12h, {"1"})};
  CHECK(z12h->add_sets(ones) == subset_of(*z12h, {"0", "2", "4", "6"}));

  // adding {0} is the identity on singletons
  for (ElementId x = 0; x < z12h->size(); ++x) {
    std::vector<Subset> zx{z12h->singleton(z12h->zero()), z12h->singleton(x)};
    CHECK(z12h->add_sets(zx) == z12h->singleton(x));
  }

  CHECK_THROWS_AS(z4->add_sets(std::vector<Subset>{subset_of(*z4, {"1"})}), Error);
  std::vector<Subset> with_empty{Subset(4), subset_of(*z4, {"1"})};
  CHECK_THROWS_AS(z4->add_sets(with_empty), Error);
}

TEST_CASE("subset extension is monotone") {
  RingPtr z12h = fixture_ring("z12modH");
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    Subset a(6), b(6);
    for (int e = 0; e < 6; ++e) {
      if (rng() % 2) a.set(e);
      if (rng() % 2) b.set(e);
    }
    if (a.empty() || b.empty()) continue;
    Subset bigger = a;
    bigger.set(static_cast<int>(rng() % 6));
    std::vector<Subset> small_args{a, b};
    std::vector<Subset> big_args{bigger, b};
    CHECK(z12h->add_sets(big_args).contains(z12h->add_sets(small_args)));
  }
}

TEST_CASE("iterated product") {
  RingPtr z12h = fixture_ring("z12modH");
  ElementId c2 = z12h->element("2"), c3 = z12h->element("3");
  // 2 * 2 * 3 = 12 = 0 on representatives
  CHECK(z12h->iterated_mul(std::vector<ElementId>{c2, c2, c3}) == z12h->zero());
  for (ElementId x = 0; x < z12h->size(); ++x)
    CHECK(z12h->iterated_mul(std::vector<ElementId>{x}) == x);
  ElementId one = *z12h->one();
  CHECK(z12h->iterated_mul(std::vector<ElementId>{one, one, one}) == one);

  // order independence, all length-3 tuples
  for_all_tuples(6, 3, [&](std::span<const ElementId> t) {
    std::vector<ElementId> sorted_t(t.begin(), t.end());
    std::sort(sorted_t.begin(), sorted_t.end());
    CHECK(z12h->iterated_mul(t) == z12h->iterated_mul(sorted_t));
    CHECK(z12h->iterated_mul(t) == oracle::iterated(*z12h, sorted_t));
  });

  // inadmissible length for n = 3
  RingPtr z4n3 = fixture_ring("z4n3");
  CHECK_THROWS_AS(z4n3->iterated_mul(std::vector<ElementId>{1, 1}), Error);
  CHECK(z4n3->iterated_mul(std::vector<ElementId>{2, 2, 1, 3, 1}) ==
        oracle::iterated(*z4n3, {2, 2, 1, 3, 1}));
}

TEST_CASE("padded product") {
  RingPtr z12h = fixture_ring("z12modH");
  ElementId c2 = z12h->element("2"), c6 = z12h->element("6");
  CHECK(z12h->pad_mul(std::vector<ElementId>{c2, c6}) == z12h->zero());  // 12 = 0
  for (ElementId g = 0; g < z12h->size(); ++g)
    CHECK(z12h->pad_mul(std::vector<ElementId>{g}) == g);

  RingPtr rng_ring = fixture_ring("rng2z8");
  CHECK_FALSE(rng_ring->one().has_value());
  CHECK_THROWS_AS(rng_ring->pad_mul(std::vector<ElementId>{1}), Error);
}

TEST_CASE("scalar identity discovery") {
  CHECK(fixture_ring("z12modH")->one() == 1);  // the class of 1
  CHECK(fixture_ring("z4")->one() == 1);
  CHECK_FALSE(fixture_ring("rng2z8")->one().has_value());
  CHECK(fixture_ring("zero")->one() == 0);
}

TEST_CASE("all shipped fixtures validate") {
  for (const char* name : {"z12modH", "z2", "z3", "z4", "z6", "z8", "z12", "zero", "rng2z8",
                           "z4n3", "z9m3"}) {
    auto inst = testutil::load_fixture(name);
    CHECK_MESSAGE(inst.ring != nullptr, name);
    CHECK(inst.report.passed());
  }
}

TEST_CASE("neutral and zero are unique on validated rings") {
  for (const char* name : {"z12modH", "z4", "z9m3"}) {
    RingPtr ring = fixture_ring(name);
    int neutrals = 0;
    for (ElementId z = 0; z < ring->size(); ++z) {
      bool neutral = true;
      for (ElementId x = 0; x < ring->size() && neutral; ++x) {
        std::vector<ElementId> t{x};
        t.resize(static_cast<size_t>(ring->m()), z);
        const Subset& got = ring->add(t);
        neutral = got.count() == 1 && got.test(x);
      }
      if (neutral) ++neutrals;
    }
    CHECK(neutrals == 1);
  }
}

namespace {

RingTables z12modH_tables() {
  return load_instance_file(testutil::fixture_path("z12modH")).tables;
}

}  // namespace

TEST_CASE("single-entry perturbations of the paper fixture fail the audit") {
  // 2+2 changed from {0,4} to {0}: breaks reversibility/uniqueness.
  {
    RingTables t = z12modH_tables();
    std::vector<ElementId> key{2, 2};
    t.h.set_entry(key, Subset::single(6, 0));
    AxiomReport report;
    CHECK(Ring::create(t, &report) == nullptr);
    const AxiomCheck* fail = report.first_failure();
    REQUIRE(fail != nullptr);
    CHECK((fail->name == "h-reversibility" || fail->name == "h-unique-inverses" ||
           fail->name == "h-associativity"));
    CHECK(fail->witness.has_value());
  }
  // k entry 3*4 changed from 0 to 6: breaks distributivity or associativity.
  {
    RingTables t = z12modH_tables();
    std::vector<ElementId> key{3, 4};
    t.k.set_entry(key, 5);  // label "6" has index 5
    AxiomReport report;
    CHECK(Ring::create(t, &report) == nullptr);
    const AxiomCheck* fail = report.first_failure();
    REQUIRE(fail != nullptr);
    CHECK((fail->name == "k-distributivity" || fail->name == "k-associativity"));
  }
  // every h-entry perturbation that drops an element must fail something
  {
    RingTables base = z12modH_tables();
    const TupleIndex& idx = base.h.index();
    int failures = 0, candidates = 0;
    for (size_t r = 0; r < idx.table_size(); ++r) {
      std::vector<ElementId> key = idx.unrank(r);
      Subset entry = base.h.at(key);
      if (entry.count() < 2) continue;
      ++candidates;
      RingTables t = z12modH_tables();
      Subset smaller = entry;
      smaller.reset(entry.first());
      t.h.set_entry(key, smaller);
      AxiomReport report;
      if (Ring::create(t, &report) == nullptr) ++failures;
    }
    CHECK(candidates > 0);
    CHECK(failures == candidates);
  }
}

TEST_CASE("axiom witnesses replay through public operations") {
  RingTables t = z12modH_tables();
  std::vector<ElementId> key{2, 2};
  t.h.set_entry(key, Subset::single(6, 0));
  AxiomReport report;
  validate_canonical_hypergroup(t.h, t.zero);
  report = validate_canonical_hypergroup(t.h, t.zero);
  const AxiomCheck* fail = report.first_failure();
  REQUIRE(fail != nullptr);
  REQUIRE(fail->witness.has_value());
  if (fail->name == "h-associativity") {
    const Witness& w = *fail->witness;
    REQUIRE(w.tuple.size() == 3);
    REQUIRE(w.positions.size() == 2);
    auto nest = [&](int pos) {
      std::vector<Subset> args;
      for (int i = 0; i < 3; ++i) {
        if (i == pos) continue;
        (void)i;
      }
      // evaluate h(x0, h(x1,x2)) vs h(h(x0,x1), x2) through the table
      std::vector<ElementId> inner(w.tuple.begin() + pos, w.tuple.begin() + pos + 2);
      std::vector<Subset> outer;
      for (int i = 0; i < pos; ++i) outer.push_back(Subset::single(6, w.tuple[static_cast<size_t>(i)]));
      outer.push_back(t.h.at(inner));
      for (size_t i = static_cast<size_t>(pos) + 2; i < w.tuple.size(); ++i)
        outer.push_back(Subset::single(6, w.tuple[i]));
      return extend_hyperop_to_subsets(t.h, outer);
    };
    CHECK(nest(w.positions[0]) != nest(w.positions[1]));
  }
}

TEST_CASE("validate_canonical_hypergroup standalone") {
  RingTables t = z12modH_tables();
  AxiomReport rep = validate_canonical_hypergroup(t.h, t.zero);
  CHECK(rep.passed());
  // trivial group hypergroup (any abelian group) is canonical
  RingTables z6 = load_instance_file(testutil::fixture_path("z6")).tables;
  CHECK(validate_canonical_hypergroup(z6.h, z6.zero).passed());
}
