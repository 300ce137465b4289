#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "scf/fixtures.hpp"
#include "scf/generator.hpp"
#include "scf/json_io.hpp"

using namespace scf;

namespace {

std::set<std::string> failedAxioms(const Universe& u) {
  std::set<std::string> out;
  for (const auto& e : validateUniverse(u).entries)
    if (!e.passed) out.insert(e.axiom);
  return out;
}

TraceSet ts(OrdVec v) { return TraceSet(std::move(v)); }

}  // namespace

TEST_CASE("the running-example universe passes the whole ledger") {
  Universe u = fixtures::u1();
  AxiomReport rep = validateUniverse(u);
  for (const auto& e : rep.entries) {
    CAPTURE(e.axiom);
    CAPTURE(e.witness);
    CHECK(e.passed);
  }
  CHECK(rep.entries.size() == 14);
  CHECK(rep.entries.front().axiom == "A1");
  CHECK(rep.entries.back().axiom == "A14");
  CHECK(scanUniverseDefects(u).empty());
  CHECK(validateUniverse(fixtures::u2()).allPassed());
}

TEST_CASE("documented single-field mutants are rejected with the predicted axioms") {
  auto expectFails = [](const Universe& u, const std::set<std::string>& predicted) {
    auto failed = failedAxioms(u);
    for (const auto& a : predicted) {
      CAPTURE(a);
      CHECK(failed.count(a));
    }
    CHECK(!failed.empty());
  };

  SUBCASE("zero omega1 cut") {
    Universe u = fixtures::u1();
    u.config.omega1Cut = 0;
    expectFails(u, {"A1"});
  }
  SUBCASE("duplicate trace and index pair") {
    Universe u = fixtures::u1();
    CountableModel clone = u.countable("M0");
    clone.id = "M0b";
    u.countables["M0b"] = clone;
    expectFails(u, {"A1"});
  }
  SUBCASE("trace reaching above the last comparison point") {
    Universe u = fixtures::u1();
    CountableModel mx;
    mx.id = "MX";
    mx.trace = ts({0, 1, 2, 13, 37});
    mx.indexSet = {0, 1};
    u.countables["MX"] = mx;
    expectFails(u, {"A2", "A9"});
  }
  SUBCASE("removing 32 from Lambda pushes a comparison point onto the cut") {
    Universe u = fixtures::u1();
    u.config.lambdaSet = {12, 20, 28, 36};
    auto failed = failedAxioms(u);
    CHECK(failed.count("A6"));
    const auto& e = validateUniverse(u).entry("A6");
    CHECK(e.witness.find("P") != std::string::npos);
  }
  SUBCASE("a given set with the model's own delta") {
    Universe u = fixtures::u1();
    u.countables["N"].setFamily.insert(ts({0, 1, 2, 3, 4, 5, 6, 13, 14}));
    expectFails(u, {"A7"});
  }
  SUBCASE("a missing initial segment") {
    Universe u = fixtures::u1();
    u.countables["N"].setFamily.erase(ts({0}));
    expectFails(u, {"A7"});
  }
  SUBCASE("a member whose trace is not contained") {
    Universe u = fixtures::u1();
    u.countables["M0"].modelFamily.insert("M2");
    expectFails(u, {"A8", "A11", "A13"});
  }
  SUBCASE("an index drop breaks intersection closure") {
    Universe u = fixtures::u1();
    u.countables["M2"].indexSet = {0};
    expectFails(u, {"A9"});
  }
  SUBCASE("a simple model missing an intersection member") {
    Universe u = fixtures::u1();
    u.countables["N"].modelFamily.erase("M0");
    expectFails(u, {"A10"});
  }
  SUBCASE("clearing the given sets of N") {
    Universe u = fixtures::u1();
    u.countables["N"].setFamily.clear();
    auto failed = failedAxioms(u);
    CHECK(failed.count("A11"));
    CHECK(failed.count("A13"));
    CHECK(!failed.count("A10"));
  }
  SUBCASE("overlapping stationary sets") {
    Universe u = fixtures::u1();
    u.config.stationaryFamily[1] = {20};
    expectFails(u, {"A14"});
  }
}

TEST_CASE("comparison points on the running example") {
  Universe u = fixtures::u1();
  CHECK(beta(u, u.countable("M0"), u.countable("M2")) == Ord::fin(28));
  CHECK(beta(u, u.countable("M2"), u.countable("N")) == Ord::fin(32));
  CHECK(beta(u, u.countable("M0"), u.countable("N")) == Ord::fin(28));
  // Diagonal: least Lambda element above the trace's own sup.
  CHECK(beta(u, u.countable("M0"), u.countable("M0")) == Ord::fin(28));
  CHECK(beta(u, u.countable("N"), u.countable("N")) == Ord::fin(32));
  for (const auto& [mi, m] : u.countables)
    for (const auto& [ni, n] : u.countables) CHECK(beta(u, m, n) == beta(u, n, m));

  Universe tiny;
  tiny.config.size = 6;
  tiny.config.omega1Cut = 1;
  tiny.config.lambdaSet = {2};
  tiny.config.lambdaStar = 1;
  tiny.config.stationaryFamily = {{2}};
  CountableModel big;
  big.id = "B";
  big.trace = ts({0, 3});
  tiny.countables["B"] = big;
  CHECK_THROWS_AS((void)beta(tiny, tiny.countable("B"), tiny.countable("B")), Error);
}

TEST_CASE("set membership facts") {
  Universe u = fixtures::u1();
  const auto& n = u.countable("N");
  CHECK(memSet(u, ts({0, 1, 2, 13, 20, 21}), n));
  // The model's own cut has its delta and is never a member.
  CHECK(!memSet(u, n.trace.restrictBelow(Ord::fin(20)), n));
  CHECK(!memSet(u, ts({0, 1, 2, 3, 13}), n));
  CHECK(!memSet(u, ts({0, 1, 2}), u.countable("M0")));
}

TEST_CASE("hull membership resolves through representations") {
  Universe u = fixtures::u1();
  TraceSet m020 = u.countable("M0").trace.restrictBelow(Ord::fin(20));
  TraceSet n20 = u.countable("N").trace.restrictBelow(Ord::fin(20));
  CHECK(hull(u, m020, HullTarget::cut(Ord::fin(20))));
  CHECK(hull(u, m020, HullTarget::cut(Ord::kappa())));
  CHECK(hull(u, m020, HullTarget::set(n20)));
  CHECK(!hull(u, n20, HullTarget::set(m020)));
  CHECK_THROWS_AS((void)hull(u, m020, HullTarget::set(ts({5, 17}))), Error);
}

TEST_CASE("intersections resolve to models of the universe") {
  Universe u = fixtures::u1();
  CHECK(intersectCountable(u, u.countable("M0"), u.countable("M2")).id == "M0");
  CHECK(intersectCountable(u, u.countable("M2"), u.countable("M2")).id == "M2");
  CHECK(intersectCountable(u, u.countable("M0"), u.countable("N")).id == "M0");
  CHECK(intersectWithUncountable(u, u.countable("N"), u.uncountable("P")).id == "N");

  Universe mut = fixtures::u1();
  mut.uncountables["P"].cut = 22;
  mut.uncountables["P"].modelFamily = {"M0"};
  CHECK(intersectWithUncountable(mut, mut.countable("M2"), mut.uncountable("P")).id == "M0");

  Universe broken = fixtures::u1();
  broken.countables["M2"].indexSet = {0};
  CHECK_THROWS_AS((void)intersectCountable(broken, broken.countable("M0"),
                                           broken.countable("M2")),
                  Error);
}

TEST_CASE("an empty universe passes vacuously") {
  Universe u;
  u.config.size = 8;
  u.config.omega1Cut = 2;
  u.config.lambdaSet = {4};
  u.config.lambdaStar = 1;
  u.config.stationaryFamily = {{4}};
  CHECK(validateUniverse(u).allPassed());
}
