#include "scf/fixtures.hpp"

namespace scf {
namespace fixtures {

namespace {

TraceSet ts(OrdVec v) { return TraceSet(std::move(v)); }

CountableModel model(ModelId id, OrdVec trace, std::set<uint32_t> idx, bool simple = false) {
  CountableModel m;
  m.id = std::move(id);
  m.trace = ts(std::move(trace));
  m.indexSet = std::move(idx);
  m.simple = simple;
  return m;
}

}  // namespace

Universe u1() {
  Universe u;
  u.config.size = 40;
  u.config.omega1Cut = 10;
  u.config.lambdaSet = {12, 20, 28, 32, 36};
  u.config.lambdaStar = 2;
  u.config.stationaryFamily = {{20}, {28}};

  CountableModel m0 = model("M0", {0, 1, 2, 13, 20, 21}, {0, 1});
  CountableModel m2 = model("M2", {0, 1, 2, 13, 20, 21, 28, 29}, {0, 1});
  CountableModel n = model("N", {0, 1, 2, 3, 4, 5, 6, 13, 14, 20, 21, 22, 28, 29, 30}, {0, 1},
                           true);
  for (size_t len = 1; len <= m2.trace.size(); ++len) n.setFamily.insert(m2.trace.prefix(len));
  n.modelFamily = {"M0", "M2"};

  UncountableModel p;
  p.id = "P";
  p.cut = 36;
  p.indexSet = {0, 1};
  p.modelFamily = {"M0", "M2", "N"};
  p.simple = true;

  u.countables = {{"M0", m0}, {"M2", m2}, {"N", n}};
  u.uncountables = {{"P", p}};
  return u;
}

Universe u2() {
  Universe u = u1();
  // Incomparable with all of M0, M2, N: its cut at 20 is {0,1,2,3,13}, which
  // is not one of anyone's given sets and matches no trace restriction.
  u.countables["M3"] = model("M3", {0, 1, 2, 3, 13, 24}, {0, 1});
  u.uncountables["P"].modelFamily.insert("M3");
  return u;
}

PCondition p1(const Universe& u, StationaryRef ref) {
  const auto& n = u.countable("N");
  TraceSet n20 = n.trace.restrictBelow(Ord::fin(20));
  PCondition p;
  p.s = ref;
  p.a = {"N"};
  p.f[DomainElement::ordS(20)] = {n20};
  p.f[DomainElement::setElem(n20)] = {};
  p.g[GKey{n20, DomainElement::ordS(20)}] = {15};
  p.normalize(u);
  return p;
}

PCondition amalgamW(const Universe& u, StationaryRef ref) {
  const auto& m0 = u.countable("M0");
  TraceSet m020 = m0.trace.restrictBelow(Ord::fin(20));
  PCondition w;
  w.s = ref;
  w.a = {"M0"};
  w.f[DomainElement::ordS(20)] = {m020};
  w.f[DomainElement::setElem(m020)] = {};
  w.normalize(u);
  return w;
}

PCondition amalgamExpected(const Universe& u, StationaryRef ref) {
  const auto& m0 = u.countable("M0");
  const auto& n = u.countable("N");
  TraceSet m020 = m0.trace.restrictBelow(Ord::fin(20));
  TraceSet n20 = n.trace.restrictBelow(Ord::fin(20));
  PCondition out;
  out.s = ref;
  out.a = {"M0", "N"};
  out.f[DomainElement::ordS(20)] = {m020, n20};
  out.f[DomainElement::setElem(m020)] = {};
  out.f[DomainElement::setElem(n20)] = {m020};
  out.g[GKey{n20, DomainElement::ordS(20)}] = {15};
  out.normalize(u);
  return out;
}

QCondition q1(const Universe& u) {
  QCondition q;
  q.a = {"N"};
  q.fBig[0] = p1(u, StationaryRef::coordSet(0));
  return q;
}

}  // namespace fixtures
}  // namespace scf
