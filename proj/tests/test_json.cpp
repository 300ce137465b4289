#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "scf/fixtures.hpp"
#include "scf/generator.hpp"
#include "scf/harness/builders.hpp"
#include "scf/json_io.hpp"

using namespace scf;

TEST_CASE("canonical serialization round-trips byte-exactly") {
  Universe u = fixtures::u1();
  std::string bytes = canonicalDump(toJson(u));
  Universe back = universeFromJson(json::parse(bytes));
  CHECK(canonicalDump(toJson(back)) == bytes);

  PCondition p1 = fixtures::p1(u);
  std::string pb = canonicalDump(toJson(p1));
  CHECK(canonicalDump(toJson(pconditionFromJson(json::parse(pb)))) == pb);

  QCondition q1 = fixtures::q1(u);
  std::string qb = canonicalDump(toJson(q1));
  CHECK(canonicalDump(toJson(qconditionFromJson(json::parse(qb)))) == qb);
}

TEST_CASE("generated artifacts round-trip byte-exactly") {
  GenParams params;
  SplitMix64 rng(99);
  for (int i = 0; i < 25; ++i) {
    Universe u = generateUniverse(rng.next(), params);
    std::string bytes = canonicalDump(toJson(u));
    CHECK(canonicalDump(toJson(universeFromJson(json::parse(bytes)))) == bytes);

    PCondition p = harness::buildP(u, StationaryRef::unionSet(), rng, 5);
    std::string pb = canonicalDump(toJson(p));
    CHECK(canonicalDump(toJson(pconditionFromJson(json::parse(pb)))) == pb);

    QCondition q = harness::buildQ(u, rng, 4);
    std::string qb = canonicalDump(toJson(q));
    CHECK(canonicalDump(toJson(qconditionFromJson(json::parse(qb)))) == qb);
  }
}

TEST_CASE("the bundled fixture documents match the in-code fixtures") {
  Universe u = fixtures::u1();
  auto check = [](const char* path, const json& expect) {
    CAPTURE(path);
    CHECK(canonicalDump(loadJsonFile(path)) == canonicalDump(expect));
  };
  check("data/u1.json", toJson(u));
  check("data/u2.json", toJson(fixtures::u2()));
  check("data/p1.json", toJson(fixtures::p1(u)));
  check("data/w1.json", toJson(fixtures::amalgamW(u)));
  check("data/amalgam.json", toJson(fixtures::amalgamExpected(u)));
  check("data/q1.json", toJson(fixtures::q1(u)));
}

TEST_CASE("kappa serializes as a string") {
  CHECK(toJson(Ord::kappa()) == json("kappa"));
  CHECK(toJson(Ord::fin(5)) == json(5));
  CHECK(ordFromJson(json("kappa"), "x").isKappa());
  CHECK(ordFromJson(json(12), "x") == Ord::fin(12));
  CHECK_THROWS_AS((void)ordFromJson(json("k"), "x"), Error);
}

TEST_CASE("parse errors carry field paths") {
  json broken = toJson(fixtures::u1());
  broken["countables"]["M0"].erase("trace");
  try {
    (void)universeFromJson(broken);
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
    CHECK(std::string(e.what()).find("countables.M0") != std::string::npos);
  }

  json unsorted = toJson(fixtures::p1(fixtures::u1()));
  unsorted["aSet"] = json::array({"N"});
  unsorted["fMap"][0]["chain"][0] = json::array({3, 1});
  CHECK_THROWS_AS((void)pconditionFromJson(unsorted), Error);
}

TEST_CASE("axiom reports and violation lists serialize with verdicts") {
  Universe u = fixtures::u1();
  json rep = toJson(validateUniverse(u));
  CHECK(rep.at("valid") == true);
  CHECK(rep.at("entries").size() == 14);

  u.countables["N"].setFamily.clear();
  CHECK(toJson(validateUniverse(u)).at("valid") == false);

  json ok = toJson(std::vector<ClauseViolation>{});
  CHECK(ok.at("valid") == true);
}
