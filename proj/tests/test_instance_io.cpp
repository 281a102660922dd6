#include "doctest.h"

#include "krasner/instance_io.hpp"
#include "test_helpers.hpp"

using namespace krasner;

namespace {

bool tables_equal(const RingTables& a, const RingTables& b) {
  if (a.labels != b.labels || a.m != b.m || a.n != b.n || a.zero != b.zero || a.one != b.one)
    return false;
  const TupleIndex& hi = a.h.index();
  for (size_t r = 0; r < hi.table_size(); ++r) {
    std::vector<ElementId> t = hi.unrank(r);
    if (a.h.at(t) != b.h.at(t)) return false;
  }
  const TupleIndex& ki = a.k.index();
  for (size_t r = 0; r < ki.table_size(); ++r) {
    std::vector<ElementId> t = ki.unrank(r);
    if (a.k.at(t) != b.k.at(t)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("round trip preserves tables verbatim") {
  for (const char* name : {"z12modH", "z4", "rng2z8", "z4n3", "z9m3", "zero"}) {
    InstanceData orig = load_instance_file(testutil::fixture_path(name));
    RingPtr ring = Ring::create(orig.tables);
    REQUIRE(ring != nullptr);
    std::string text = serialize_instance(*ring);
    InstanceData back = parse_instance(text);
    CHECK_MESSAGE(tables_equal(orig.tables, back.tables), name);
    // serializing the reloaded ring is byte-stable
    RingPtr ring2 = Ring::create(back.tables);
    REQUIRE(ring2 != nullptr);
    CHECK(serialize_instance(*ring2) == text);
  }
}

TEST_CASE("named ideals and expansions load") {
  auto inst = testutil::load_fixture("z12modH");
  REQUIRE(inst.ring);
  CHECK(inst.ideals.count("Q"));
  CHECK(inst.ideals.at("Q").members() == testutil::subset_of(*inst.ring, {"0", "2", "4", "6"}));

  auto z4 = testutil::load_fixture("z4");
  REQUIRE(z4.ring);
  CHECK(z4.expansions.count("toward_m"));
  CHECK(z4.expansions.at("toward_m").apply(testutil::subset_of(*z4.ring, {"0"})) ==
        testutil::subset_of(*z4.ring, {"0", "2"}));
}

TEST_CASE("parse errors are positioned") {
  CHECK_THROWS_WITH_AS(parse_instance("{\"m\": 2"), doctest::Contains("malformed"), Error);

  // missing tuple
  std::string missing = R"({"m":2,"n":2,"carrier":["0","1"],"zero":"0","one":"1",
    "h":{"0,0":["0"],"0,1":["1"]},
    "k":{"0,0":"0","0,1":"0","1,1":"1"}})";
  CHECK_THROWS_WITH_AS(parse_instance(missing), doctest::Contains("missing entry"), Error);

  // unsorted tuple key
  std::string unsorted = R"({"m":2,"n":2,"carrier":["0","1"],"zero":"0",
    "h":{"0,0":["0"],"1,0":["1"],"1,1":["0"]},
    "k":{"0,0":"0","0,1":"0","1,1":"1"}})";
  CHECK_THROWS_WITH_AS(parse_instance(unsorted), doctest::Contains("not sorted"), Error);

  // unknown label
  std::string unknown = R"({"m":2,"n":2,"carrier":["0","1"],"zero":"0",
    "h":{"0,0":["0"],"0,1":["2"],"1,1":["0"]},
    "k":{"0,0":"0","0,1":"0","1,1":"1"}})";
  CHECK_THROWS_WITH_AS(parse_instance(unknown), doctest::Contains("unknown label"), Error);

  // empty hyperoperation entry
  std::string empty_entry = R"({"m":2,"n":2,"carrier":["0","1"],"zero":"0",
    "h":{"0,0":["0"],"0,1":[],"1,1":["0"]},
    "k":{"0,0":"0","0,1":"0","1,1":"1"}})";
  CHECK_THROWS_AS(parse_instance(empty_entry), Error);

  try {
    parse_instance("{\"m\": 1, \"n\": 2, \"carrier\": [\"0\"], \"zero\": \"0\", \"h\": {}, \"k\": {}}");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kParse);
  }
}

TEST_CASE("non-ideal named subset is rejected at load") {
  std::string doc = R"({"m":2,"n":2,"carrier":["0","1"],"zero":"0","one":"1",
    "h":{"0,0":["0"],"0,1":["1"],"1,1":["0"]},
    "k":{"0,0":"0","0,1":"0","1,1":"1"},
    "ideals":{"bad":["1"]}})";
  CHECK_THROWS_WITH_AS(validate_instance(parse_instance(doc)), doctest::Contains("bad"), Error);
}

TEST_CASE("invalid expansion table is rejected at load") {
  // {0} -> G but {0,2} -> {0,2} breaks monotonicity on z4
  std::string doc = R"({"m":2,"n":2,"carrier":["0","1","2","3"],"zero":"0","one":"1",
    "h":{"0,0":["0"],"0,1":["1"],"0,2":["2"],"0,3":["3"],"1,1":["2"],"1,2":["3"],"1,3":["0"],
         "2,2":["0"],"2,3":["1"],"3,3":["2"]},
    "k":{"0,0":"0","0,1":"0","0,2":"0","0,3":"0","1,1":"1","1,2":"2","1,3":"3",
         "2,2":"0","2,3":"2","3,3":"1"},
    "expansions":{"broken":[[["0"],["0","1","2","3"]],[["0","2"],["0","2"]],
                            [["0","1","2","3"],["0","1","2","3"]]]}})";
  CHECK_THROWS_WITH_AS(validate_instance(parse_instance(doc)), doctest::Contains("broken"), Error);
}

TEST_CASE("reserved expansion names are refused") {
  std::string doc = R"({"m":2,"n":2,"carrier":["0","1"],"zero":"0","one":"1",
    "h":{"0,0":["0"],"0,1":["1"],"1,1":["0"]},
    "k":{"0,0":"0","0,1":"0","1,1":"1"},
    "expansions":{"delta1":[[["0"],["0"]],[["0","1"],["0","1"]]]}})";
  CHECK_THROWS_WITH_AS(validate_instance(parse_instance(doc)), doctest::Contains("reserved"), Error);
}
