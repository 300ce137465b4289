#include "scf/adequacy.hpp"

namespace scf {

const char* relName(ModelRel r) {
  switch (r) {
    case ModelRel::Less: return "Less";
    case ModelRel::Equiv: return "Equiv";
    case ModelRel::Greater: return "Greater";
    case ModelRel::Incomparable: return "Incomparable";
  }
  return "?";
}

ModelRel compare(const Universe& u, const CountableModel& m, const CountableModel& n) {
  if (m.id == n.id) return ModelRel::Equiv;
  Ord b = beta(u, m, n);
  TraceSet mlow = m.trace.restrictBelow(b);
  TraceSet nlow = n.trace.restrictBelow(b);
  if (mlow == nlow) return ModelRel::Equiv;
  if (memSet(u, mlow, n)) return ModelRel::Less;
  if (memSet(u, nlow, m)) return ModelRel::Greater;
  return ModelRel::Incomparable;
}

bool isAdequate(const Universe& u, const std::set<ModelId>& ids) {
  for (auto it = ids.begin(); it != ids.end(); ++it) {
    const auto& m = u.countable(*it);
    auto jt = it;
    for (++jt; jt != ids.end(); ++jt) {
      if (compare(u, m, u.countable(*jt)) == ModelRel::Incomparable) return false;
    }
  }
  return true;
}

std::set<ModelId> closureUnderCountable(const Universe& u, const std::set<ModelId>& a,
                                        const ModelId& nId) {
  const auto& n = u.countable(nId);
  std::set<ModelId> out = a;
  for (const auto& mId : a) {
    const auto& m = u.countable(mId);
    if (compare(u, m, n) == ModelRel::Less) out.insert(intersectCountable(u, m, n).id);
  }
  if (!isAdequate(u, out))
    fail(Errc::NotClosed, "closure under " + nId + " is not adequate (universe defect)");
  return out;
}

std::set<ModelId> closureUnderUncountable(const Universe& u, const std::set<ModelId>& a,
                                          const ModelId& pId) {
  const auto& p = u.uncountable(pId);
  std::set<ModelId> out = a;
  for (const auto& mId : a) out.insert(intersectWithUncountable(u, u.countable(mId), p).id);
  if (!isAdequate(u, out))
    fail(Errc::NotClosed, "closure under " + pId + " is not adequate (universe defect)");
  return out;
}

std::optional<uint32_t> minAbove(const Universe&, const CountableModel& m, Ord bound) {
  if (bound.isKappa()) return std::nullopt;
  for (uint32_t x : m.trace.elems())
    if (x >= bound.finite()) return x;
  return std::nullopt;
}

OrdVec rStar(const Universe& u, const std::set<ModelId>& a) {
  OrdVec out;
  for (const auto& kId : a) {
    const auto& k = u.countable(kId);
    for (const auto& mId : a) {
      if (kId == mId) continue;
      const auto& m = u.countable(mId);
      if (compare(u, k, m) != ModelRel::Equiv) continue;
      if (auto g = minAbove(u, m, beta(u, k, m))) out.push_back(*g);
    }
  }
  return ords::normalized(std::move(out));
}

OrdVec rStar(const Universe& u, const std::set<ModelId>& a, const OrdVec& s) {
  return ords::intersect(rStar(u, a), s);
}

OrdVec sStar(const Universe& u, const std::set<ModelId>& a) {
  OrdVec out;
  for (const auto& mId : a) {
    const auto& m = u.countable(mId);
    for (const auto& nId : a) {
      if (mId == nId) continue;
      const auto& n = u.countable(nId);
      if (compare(u, m, n) != ModelRel::Equiv) continue;
      auto g = minAbove(u, m, beta(u, m, n));
      if (!g) continue;
      for (uint32_t i : m.indexSet) {
        if (!n.indexSet.count(i) || i >= u.config.lambdaStar) continue;
        if (ords::contains(u.config.stationaryFamily[i], *g)) out.push_back(i);
      }
    }
  }
  return ords::normalized(std::move(out));
}

}  // namespace scf
