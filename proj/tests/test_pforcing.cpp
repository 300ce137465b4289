#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "scf/fixtures.hpp"
#include "scf/harness/enumerate.hpp"
#include "scf/pforcing.hpp"

using namespace scf;

namespace {

TraceSet ts(OrdVec v) { return TraceSet(std::move(v)); }

std::set<std::string> clausesOf(const Universe& u, const PCondition& p) {
  std::set<std::string> out;
  for (const auto& v : validateP(u, p)) out.insert(v.clause);
  return out;
}

PCondition emptyCond() { return PCondition{}; }

}  // namespace

TEST_CASE("the documentation condition validates") {
  Universe u = fixtures::u1();
  CHECK(validateP(u, fixtures::p1(u)).empty());
  CHECK(validateP(u, emptyCond()).empty());
}

TEST_CASE("each defining clause has a pure mutant") {
  Universe u = fixtures::u1();
  Universe u2 = fixtures::u2();
  PCondition p1 = fixtures::p1(u);
  TraceSet n20 = u.countable("N").trace.restrictBelow(Ord::fin(20));
  TraceSet m020 = u.countable("M0").trace.restrictBelow(Ord::fin(20));

  SUBCASE("C1: inadequate side conditions") {
    PCondition p;
    p.a = {"M0", "M3"};
    p.normalize(u2);
    CHECK(clausesOf(u2, p) == std::set<std::string>{"C1"});
  }
  SUBCASE("C2: a set element without provenance") {
    PCondition p = p1;
    p.f[DomainElement::setElem(ts({0, 1, 2, 13}))] = {};
    p.normalize(u);
    CHECK(clausesOf(u, p) == std::set<std::string>{"C2"});
  }
  SUBCASE("C3: a chain member missing from the domain") {
    PCondition p = p1;
    p.f.erase(DomainElement::setElem(n20));
    p.normalize(u);
    CHECK(clausesOf(u, p) == std::set<std::string>{"C3"});
  }
  SUBCASE("C4: a g ordinal below the member's sup") {
    PCondition p = p1;
    p.g[GKey{n20, DomainElement::ordS(20)}] = {13};
    p.normalize(u);
    CHECK(clausesOf(u, p) == std::set<std::string>{"C4"});
  }
  SUBCASE("C5: an outer g value not inside the inner one") {
    PCondition p = fixtures::amalgamExpected(u);
    p.g[GKey{m020, DomainElement::ordS(20)}] = {15};
    p.normalize(u);
    CHECK(clausesOf(u, p) == std::set<std::string>{"C5"});
  }
  SUBCASE("C6: a side-condition trace missing from an ordinal chain") {
    PCondition p = p1;
    p.f[DomainElement::ordS(20)] = {};
    p.g.clear();
    p.normalize(u);
    CHECK(clausesOf(u, p) == std::set<std::string>{"C6"});
  }
  SUBCASE("C7: an uncovered remainder obligation") {
    PCondition p;
    p.a = {"M0", "M2"};
    p.normalize(u);
    CHECK(clausesOf(u, p) == std::set<std::string>{"C7"});
  }
}

TEST_CASE("the forcing order") {
  Universe u = fixtures::u1();
  PCondition p1 = fixtures::p1(u);
  CHECK(leqP(u, p1, p1));
  CHECK(leqP(u, p1, emptyCond()));
  CHECK(!leqP(u, emptyCond(), p1));

  PCondition weaker = p1;
  weaker.g.clear();
  CHECK(leqP(u, p1, weaker));
  CHECK(!leqP(u, weaker, p1));
  auto expl = leqExplainP(u, weaker, p1);
  REQUIRE(expl.size() == 1);
  CHECK(expl[0].clause == "c");
}

TEST_CASE("ordinal extension") {
  Universe u = fixtures::u1();
  PCondition base;
  base.a = {"N"};
  base.normalize(u);

  PCondition q = extendOrdinals(u, base, {20});
  PCondition expect = fixtures::p1(u);
  expect.g.clear();
  expect.normalize(u);
  CHECK(q == expect);
  CHECK(validateP(u, q).empty());
  CHECK(leqP(u, q, base));
  CHECK(q.a == base.a);

  CHECK(extendOrdinals(u, fixtures::p1(u), {}) == fixtures::p1(u));
  CHECK_THROWS_AS((void)extendOrdinals(u, fixtures::p1(u), {20}), Error);
  CHECK_THROWS_AS((void)extendOrdinals(u, base, {21}), Error);  // not stationary
}

TEST_CASE("g saturation") {
  Universe u = fixtures::u1();
  PCondition p1 = fixtures::p1(u);
  CHECK(saturateG(u, p1) == p1);  // no nested chain triple in p1

  // Saturation moves inner g values out to the enclosing keys.
  PCondition rich = fixtures::amalgamExpected(u);
  TraceSet n20 = u.countable("N").trace.restrictBelow(Ord::fin(20));
  TraceSet m020 = u.countable("M0").trace.restrictBelow(Ord::fin(20));
  rich.g[GKey{m020, DomainElement::setElem(n20)}] = {14};
  rich.normalize(u);
  REQUIRE(validateP(u, rich).empty());
  PCondition sat = saturateG(u, rich);
  CHECK(validateP(u, sat).empty());
  CHECK(leqP(u, sat, rich));
  CHECK(sat.f == rich.f);
  CHECK(sat.a == rich.a);
  CHECK(sat.gAt(m020, DomainElement::ordS(20)) == OrdVec{14});
  CHECK(saturateG(u, sat) == sat);
}

TEST_CASE("adjoining a model") {
  Universe u = fixtures::u1();
  PCondition w = fixtures::amalgamW(u);
  PCondition q = adjoinModel(u, w, "N");
  PCondition expect = fixtures::amalgamExpected(u);
  expect.g.clear();
  expect.normalize(u);
  CHECK(q == expect);
  CHECK(validateP(u, q).empty());
  CHECK(leqP(u, q, w));
  CHECK(q.a == std::set<ModelId>{"M0", "N"});

  PCondition fromMax = adjoinModel(u, emptyCond(), "N");
  CHECK(fromMax.a == std::set<ModelId>{"N"});
  CHECK(fromMax.f.empty());

  CHECK_THROWS_AS((void)adjoinModel(u, fixtures::p1(u), "M0"), Error);
}

TEST_CASE("closing under models") {
  Universe u = fixtures::u1();
  PCondition p1 = fixtures::p1(u);
  CHECK(closeUnderQ(u, p1, "P") == p1);

  PCondition base;
  base.a = {"N"};
  base.normalize(u);
  PCondition closed = closeUnderN(u, base, "N");
  CHECK(closed == base);  // nothing below N in its own side conditions

  CHECK_THROWS_AS((void)closeUnderN(u, emptyCond(), "N"), Error);
}

TEST_CASE("dense-class membership") {
  Universe u = fixtures::u1();
  PCondition p1 = fixtures::p1(u);
  CHECK(inDN(u, p1, "N"));
  CHECK(!inDN(u, emptyCond(), "N"));
  CHECK(inDQ(u, p1, "P"));
  CHECK(inDQ(u, emptyCond(), "P"));
  // Conditions inside the uncountable model are automatically in its class.
  CHECK(conditionInUncountable(u, p1, "P"));
}

TEST_CASE("restriction to an uncountable model") {
  Universe u = fixtures::u1();
  PCondition p1 = fixtures::p1(u);
  CHECK(restrictToUncountable(u, p1, "P") == p1);
  CHECK(restrictToUncountable(u, emptyCond(), "P") == emptyCond());

  PCondition q = extendOrdinals(u, p1, {28});
  REQUIRE(validateP(u, q).empty());
  REQUIRE(inDQ(u, q, "P"));
  CHECK(leqP(u, restrictToUncountable(u, q, "P"), restrictToUncountable(u, p1, "P")));

  Universe mut = fixtures::u1();
  mut.uncountables["P"].simple = false;
  CHECK_THROWS_AS((void)restrictToUncountable(mut, fixtures::p1(mut), "P"), Error);
}

TEST_CASE("restriction to a countable model") {
  Universe u = fixtures::u1();
  PCondition p1 = fixtures::p1(u);
  PCondition res = restrictToCountable(u, p1, "N");
  PCondition expect;
  expect.f[DomainElement::ordS(20)] = {};
  expect.normalize(u);
  CHECK(res == expect);
  CHECK(validateP(u, res).empty());
  CHECK(leqP(u, p1, res));
  CHECK(conditionInCountable(u, res, "N"));

  PCondition justN;
  justN.a = {"N"};
  justN.normalize(u);
  CHECK(restrictToCountable(u, justN, "N") == emptyCond());

  // Restricting below a condition of the model lands below it.
  PCondition w = fixtures::amalgamW(u);
  PCondition r = saturateG(u, closeUnderN(u, adjoinModel(u, w, "N"), "N"));
  REQUIRE(inDN(u, r, "N"));
  CHECK(leqP(u, r, w));
  CHECK(leqP(u, restrictToCountable(u, r, "N"), w));

  CHECK_THROWS_AS((void)restrictToCountable(u, emptyCond(), "N"), Error);
}

TEST_CASE("the worked countable amalgam") {
  Universe u = fixtures::u1();
  PCondition r = fixtures::p1(u);
  PCondition w = fixtures::amalgamW(u);
  REQUIRE(inDN(u, r, "N"));
  REQUIRE(conditionInCountable(u, w, "N"));
  REQUIRE(leqP(u, w, restrictToCountable(u, r, "N")));

  Counters counters;
  PCondition out = amalgCountable(u, w, r, "N", &counters);
  CHECK(out == fixtures::amalgamExpected(u));
  CHECK(validateP(u, out).empty());
  CHECK(leqP(u, out, w));
  CHECK(leqP(u, out, r));
  CHECK(counters["amalg-case2"] == 1);  // f(20) merges both chains
  CHECK(counters["amalg-case4"] == 1);  // f(N∩20) absorbs f_w(20)

  // Minimal inside condition: the restriction itself.
  PCondition wMin = restrictToCountable(u, r, "N");
  PCondition outMin = amalgCountable(u, wMin, r, "N");
  CHECK(validateP(u, outMin).empty());
  CHECK(leqP(u, outMin, r));
  for (const auto& [x, chain] : r.f) {
    for (const auto& k : chain) {
      const Chain& oc = outMin.chainAt(x);
      CHECK(std::find(oc.begin(), oc.end(), k) != oc.end());
    }
  }

  CHECK_THROWS_AS((void)amalgCountable(u, r, r, "N"), Error);  // r is not inside N
}

TEST_CASE("the uncountable amalgam") {
  Universe u = fixtures::u1();
  PCondition q = fixtures::p1(u);
  PCondition w = restrictToUncountable(u, q, "P");  // equals q here
  PCondition out = amalgUncountable(u, w, q, "P");
  CHECK(out == q);
  CHECK(leqP(u, out, w));
  CHECK(leqP(u, out, q));

  PCondition wBig = extendOrdinals(u, w, {28});
  REQUIRE(conditionInUncountable(u, wBig, "P"));
  PCondition out2 = amalgUncountable(u, wBig, q, "P");
  CHECK(validateP(u, out2).empty());
  CHECK(leqP(u, out2, wBig));
  CHECK(leqP(u, out2, q));

  CHECK_THROWS_AS((void)amalgUncountable(u, emptyCond(), q, "P"), Error);
}

TEST_CASE("the order is transitive over the small enumeration") {
  Universe u = fixtures::u1();
  harness::EnumBounds bounds;
  bounds.maxA = 1;
  bounds.maxDom = 2;
  bounds.maxGSize = 1;
  std::vector<PCondition> all;
  harness::enumerateConditions(u, StationaryRef::unionSet(), bounds,
                               [&](const PCondition& p) {
                                 all.push_back(p);
                                 return true;
                               });
  REQUIRE(all.size() == 58);
  std::vector<std::vector<bool>> leq(all.size(), std::vector<bool>(all.size()));
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = 0; j < all.size(); ++j) leq[i][j] = leqP(u, all[i], all[j]);
  for (size_t i = 0; i < all.size(); ++i) {
    CHECK(leq[i][i]);
    for (size_t j = 0; j < all.size(); ++j)
      for (size_t k = 0; k < all.size(); ++k)
        if (leq[i][j] && leq[j][k]) CHECK(leq[i][k]);
  }
}

TEST_CASE("small enumeration stays valid and saturation is idempotent on it") {
  Universe u = fixtures::u1();
  harness::EnumBounds bounds;
  bounds.maxA = 1;
  bounds.maxDom = 2;
  bounds.maxGSize = 1;
  uint64_t count = 0;
  harness::enumerateConditions(u, StationaryRef::unionSet(), bounds,
                               [&](const PCondition& p) {
                                 ++count;
                                 CHECK(validateP(u, p).empty());
                                 PCondition s = saturateG(u, p);
                                 CHECK(saturateG(u, s) == s);
                                 CHECK(leqP(u, s, p));
                                 return true;
                               });
  CHECK(count > 10);

  harness::EnumBounds zero;
  zero.maxA = 0;
  zero.maxDom = 0;
  zero.maxGSize = 0;
  CHECK(harness::countConditions(u, StationaryRef::unionSet(), zero) == 1);
}
