#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "scf/fixtures.hpp"

using namespace scf;

TEST_CASE("comparison on the running example") {
  Universe u = fixtures::u1();
  CHECK(compare(u, u.countable("M0"), u.countable("M2")) == ModelRel::Equiv);
  CHECK(compare(u, u.countable("M0"), u.countable("M0")) == ModelRel::Equiv);
  CHECK(compare(u, u.countable("M0"), u.countable("N")) == ModelRel::Less);
  CHECK(compare(u, u.countable("M2"), u.countable("N")) == ModelRel::Less);
  CHECK(compare(u, u.countable("N"), u.countable("M2")) == ModelRel::Greater);

  Universe mut = fixtures::u1();
  mut.countables["N"].setFamily.clear();
  CHECK(compare(mut, mut.countable("M0"), mut.countable("N")) == ModelRel::Incomparable);
}

TEST_CASE("adequacy of finite sets") {
  Universe u = fixtures::u1();
  CHECK(isAdequate(u, {"M0", "M2", "N"}));
  CHECK(isAdequate(u, {}));
  CHECK(isAdequate(u, {"N"}));

  Universe u2 = fixtures::u2();
  CHECK(!isAdequate(u2, {"M0", "M3"}));
  CHECK(!isAdequate(u2, {"M3", "N"}));
  CHECK(isAdequate(u2, {"M3"}));
  CHECK_THROWS_AS((void)isAdequate(u, {"nope"}), Error);

  Universe mut = fixtures::u1();
  mut.countables["N"].setFamily.clear();
  CHECK(!isAdequate(mut, {"M0", "N"}));
}

TEST_CASE("closures under models") {
  Universe u = fixtures::u1();
  CHECK(closureUnderCountable(u, {"M0", "N"}, "N") == std::set<ModelId>{"M0", "N"});
  CHECK(closureUnderCountable(u, {"N"}, "N") == std::set<ModelId>{"N"});
  CHECK(closureUnderUncountable(u, {"M0", "M2", "N"}, "P") ==
        std::set<ModelId>{"M0", "M2", "N"});
  CHECK(closureUnderUncountable(u, {}, "P").empty());
  for (const auto& out :
       {closureUnderCountable(u, {"M0", "M2", "N"}, "N"),
        closureUnderUncountable(u, {"M0", "M2"}, "P")})
    CHECK(isAdequate(u, out));

  Universe broken = fixtures::u1();
  broken.countables["N"].indexSet = {0};
  CHECK_THROWS_AS((void)closureUnderCountable(broken, {"M0", "N"}, "N"), Error);
}

TEST_CASE("least trace element above a bound") {
  Universe u = fixtures::u1();
  CHECK(minAbove(u, u.countable("M2"), Ord::fin(28)) == 28);
  CHECK(!minAbove(u, u.countable("M0"), Ord::fin(28)).has_value());
  CHECK(minAbove(u, u.countable("M0"), Ord::fin(0)) == 0);
  CHECK(!minAbove(u, u.countable("N"), Ord::kappa()).has_value());
}

TEST_CASE("remainder ordinals of the running example") {
  Universe u = fixtures::u1();
  CHECK(rStar(u, {"M0", "M2", "N"}) == OrdVec{28});
  CHECK(rStar(u, {"M2"}).empty());
  CHECK(rStar(u, {}).empty());
  OrdVec small = rStar(u, {"M0", "M2"});
  OrdVec big = rStar(u, {"M0", "M2", "N"});
  CHECK(ords::subset(small, big));
  CHECK(rStar(u, {"M0", "M2", "N"}, OrdVec{20}) == OrdVec{});
  CHECK(rStar(u, {"M0", "M2", "N"}, OrdVec{20, 28}) == OrdVec{28});
}

TEST_CASE("remainder indices of the running example") {
  Universe u = fixtures::u1();
  CHECK(sStar(u, {"M0", "M2", "N"}) == OrdVec{1});
  CHECK(sStar(u, {"M0", "M2"}) == OrdVec{1});
  CHECK(sStar(u, {}).empty());
  CHECK(sStar(u, {"N"}).empty());
  // Additivity sample on a split of the fixture set.
  OrdVec lhs = sStar(u, {"M0", "M2", "N"});
  OrdVec rhs = ords::unite(sStar(u, {"M0", "M2"}), sStar(u, {"N"}));
  CHECK(lhs == rhs);
}

TEST_CASE("restriction below the comparison point matches the intersection") {
  Universe u = fixtures::u1();
  for (const auto& [mi, m] : u.countables) {
    for (const auto& [ni, n] : u.countables) {
      if (!lessOrEquiv(compare(u, m, n))) continue;
      Ord b = beta(u, m, n);
      CHECK(m.trace.restrictBelow(b) == m.trace.intersect(n.trace));
    }
  }
}
