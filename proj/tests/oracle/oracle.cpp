#include "oracle/oracle.hpp"

namespace oracle {

namespace {

bool ordInSet(const OrdVec& v, uint32_t x) {
  for (uint32_t y : v)
    if (y == x) return true;
  return false;
}

OrdVec cutElems(const CountableModel& m, Ord alpha) {
  OrdVec out;
  for (uint32_t x : m.trace.elems())
    if (alpha.isKappa() || x < alpha.finite()) out.push_back(x);
  return out;
}

std::vector<Ord> lambdaKappa(const Universe& u) {
  std::vector<Ord> cuts;
  for (uint32_t lam : u.config.lambdaSet) cuts.push_back(Ord::fin(lam));
  cuts.push_back(Ord::kappa());
  return cuts;
}

}  // namespace

Ord beta(const Universe& u, const ModelId& mi, const ModelId& ni) {
  const auto& m = u.countable(mi);
  const auto& n = u.countable(ni);
  uint32_t top = 0;
  bool any = false;
  for (uint32_t x : m.trace.elems())
    for (uint32_t y : n.trace.elems())
      if (x == y) {
        any = true;
        if (x > top) top = x;
      }
  if (!any) fail(Errc::NoComparisonPoint, "no common ordinal");
  for (uint32_t lam : u.config.lambdaSet)
    if (lam > top) return Ord::fin(lam);
  fail(Errc::NoComparisonPoint, "no comparison point");
}

bool memSet(const Universe& u, const TraceSet& k, const ModelId& ni) {
  for (const auto& member : u.countable(ni).setFamily)
    if (member == k) return true;
  return false;
}

bool hullSet(const Universe& u, const TraceSet& k, const TraceSet& target) {
  bool anyRep = false, in = false;
  for (const auto& [mi, m] : u.countables) {
    for (Ord alpha : lambdaKappa(u)) {
      if (TraceSet(cutElems(m, alpha)) != target) continue;
      anyRep = true;
      bool below = alpha.isKappa() || k.empty() || k.elems().back() < alpha.finite();
      if (below && memSet(u, k, mi)) in = true;
    }
  }
  if (!anyRep) fail(Errc::NoRepresentation, "no representation of " + target.str());
  return in;
}

ModelRel compare(const Universe& u, const ModelId& mi, const ModelId& ni) {
  if (mi == ni) return ModelRel::Equiv;
  Ord b = beta(u, mi, ni);
  TraceSet mlow(cutElems(u.countable(mi), b));
  TraceSet nlow(cutElems(u.countable(ni), b));
  if (mlow == nlow) return ModelRel::Equiv;
  if (memSet(u, mlow, ni)) return ModelRel::Less;
  if (memSet(u, nlow, mi)) return ModelRel::Greater;
  return ModelRel::Incomparable;
}

OrdVec rStar(const Universe& u, const std::set<ModelId>& a) {
  OrdVec out;
  for (const auto& ki : a) {
    for (const auto& mi : a) {
      if (ki == mi || compare(u, ki, mi) != ModelRel::Equiv) continue;
      Ord b = beta(u, ki, mi);
      for (uint32_t x : u.countable(mi).trace.elems()) {
        if (Ord::fin(x) >= b) {
          if (!ordInSet(out, x)) out.push_back(x);
          break;
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

OrdVec sStar(const Universe& u, const std::set<ModelId>& a) {
  OrdVec out;
  for (const auto& mi : a) {
    for (const auto& ni : a) {
      if (mi == ni || compare(u, mi, ni) != ModelRel::Equiv) continue;
      Ord b = beta(u, mi, ni);
      std::optional<uint32_t> gamma;
      for (uint32_t x : u.countable(mi).trace.elems()) {
        if (Ord::fin(x) >= b) {
          gamma = x;
          break;
        }
      }
      if (!gamma) continue;
      for (uint32_t i = 0; i < u.config.lambdaStar; ++i) {
        if (!u.countable(mi).indexSet.count(i) || !u.countable(ni).indexSet.count(i))
          continue;
        if (ordInSet(u.config.stationaryFamily[i], *gamma) && !ordInSet(out, i))
          out.push_back(i);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool inHull(const Universe& u, const TraceSet& k, const DomainElement& x) {
  if (x.isOrd()) return k.empty() || k.elems().back() < x.alpha();
  try {
    return hullSet(u, k, x.set());
  } catch (const Error&) {
    return false;
  }
}

bool chainMember(const Chain& c, const TraceSet& t) {
  for (const auto& k : c)
    if (k == t) return true;
  return false;
}

}  // namespace

std::set<std::string> validateP(const Universe& u, const PCondition& p) {
  std::set<std::string> bad;
  OrdVec sset;
  if (p.s.isUnion) {
    for (const auto& s : u.config.stationaryFamily)
      for (uint32_t x : s)
        if (!ordInSet(sset, x)) sset.push_back(x);
    std::sort(sset.begin(), sset.end());
  } else {
    sset = u.stationary(p.s.coord);
  }

  // (1) the side conditions are adequate.
  for (const auto& mi : p.a)
    for (const auto& ni : p.a)
      if (oracle::compare(u, mi, ni) == ModelRel::Incomparable) bad.insert("C1");

  // (2) domain shape; chains are hull chains inside their keys.
  for (const auto& [x, chain] : p.f) {
    if (x.isOrd()) {
      if (!ordInSet(sset, x.alpha())) bad.insert("C2");
    } else {
      bool witnessed = false;
      for (const auto& mi : p.a) {
        const auto& m = u.countable(mi);
        if (m.trace == x.set()) witnessed = true;
        for (const auto& [y, _] : p.f) {
          if (!y.isOrd() || !ordInSet(sset, y.alpha())) continue;
          if (!m.trace.contains(y.alpha())) continue;
          if (TraceSet(cutElems(m, Ord::fin(y.alpha()))) == x.set()) witnessed = true;
        }
      }
      if (!witnessed || x.set().empty()) bad.insert("C2");
    }
    for (size_t i = 0; i < chain.size(); ++i) {
      if (chain[i].empty()) {
        bad.insert("C2");
        continue;
      }
      if (!inHull(u, chain[i], x)) bad.insert("C2");
      for (size_t j = 0; j < chain.size(); ++j) {
        if (i == j || chain[j].empty()) continue;
        bool ij = inHull(u, chain[i], DomainElement::setElem(chain[j]));
        bool ji = inHull(u, chain[j], DomainElement::setElem(chain[i]));
        if (chain[i] == chain[j] || !(ij ^ ji)) bad.insert("C2");
        if (i < j && chain[i].elems().back() >= chain[j].elems().back()) bad.insert("C2");
      }
    }
  }

  // (3) chains live in the domain and restrict hull-coherently.
  for (const auto& [x, chain] : p.f) {
    for (const auto& k : chain) {
      auto it = p.f.find(DomainElement::setElem(k));
      if (it == p.f.end()) {
        bad.insert("C3");
        continue;
      }
      Chain expect;
      for (const auto& l : chain)
        if (inHull(u, l, DomainElement::setElem(k))) expect.push_back(l);
      if (it->second != expect) bad.insert("C3");
    }
  }

  // (4) g keys pair chains with their keys; values sit in the window.
  for (const auto& [key, val] : p.g) {
    auto it = p.f.find(key.x);
    if (it == p.f.end() || !chainMember(it->second, key.k)) {
      bad.insert("C4");
      continue;
    }
    for (uint32_t v : val) {
      bool inWindow = v >= key.k.elems().back() &&
                      (key.x.isOrd() ? v < key.x.alpha() : key.x.set().contains(v));
      if (!inWindow) bad.insert("C4");
    }
  }

  // (5) outer g values are contained in inner ones.
  for (const auto& [x, chain] : p.f) {
    for (const auto& l : chain) {
      auto lt = p.f.find(DomainElement::setElem(l));
      if (lt == p.f.end()) continue;
      for (const auto& k : lt->second) {
        for (uint32_t v : p.gAt(k, x))
          if (!ordInSet(p.gAt(k, DomainElement::setElem(l)), v)) bad.insert("C5");
      }
    }
  }

  // (6) side-condition traces appear in their ordinal chains.
  for (const auto& [x, chain] : p.f) {
    if (!x.isOrd()) continue;
    for (const auto& mi : p.a) {
      const auto& m = u.countable(mi);
      if (!m.trace.contains(x.alpha())) continue;
      if (!chainMember(chain, TraceSet(cutElems(m, Ord::fin(x.alpha()))))) bad.insert("C6");
    }
  }

  // (7) remainder obligations are in the domain.
  for (uint32_t gamma : oracle::rStar(u, p.a)) {
    if (!ordInSet(sset, gamma)) continue;
    if (!p.f.count(DomainElement::ordS(gamma))) bad.insert("C7");
  }
  return bad;
}

bool leqP(const Universe& u, const PCondition& q, const PCondition& p) {
  (void)u;
  for (const auto& mi : p.a)
    if (!q.a.count(mi)) return false;
  for (const auto& [x, chain] : p.f) {
    auto it = q.f.find(x);
    if (it == q.f.end()) return false;
    for (const auto& k : chain)
      if (!chainMember(it->second, k)) return false;
  }
  for (const auto& [key, val] : p.g) {
    OrdVec have = q.gAt(key.k, key.x);
    for (uint32_t v : val)
      if (!ordInSet(have, v)) return false;
  }
  for (const auto& [x, pchain] : p.f) {
    auto it = q.f.find(x);
    if (it == q.f.end()) continue;
    for (const auto& k : it->second) {
      if (!p.f.count(DomainElement::setElem(k))) continue;
      if (!chainMember(pchain, k)) return false;
    }
  }
  return true;
}

PCondition restrictToCountable(const Universe& u, const PCondition& r, const ModelId& ni) {
  const auto& n = u.countable(ni);
  PCondition out;
  out.s = r.s;
  auto inN = [&](const DomainElement& x) {
    return x.isOrd() ? n.trace.contains(x.alpha()) : memSet(u, x.set(), ni);
  };
  for (const auto& [x, chain] : r.f) {
    if (!inN(x)) continue;
    Chain kept;
    for (const auto& k : chain)
      if (memSet(u, k, ni)) kept.push_back(k);
    out.f[x] = kept;
  }
  for (const auto& [key, val] : r.g) {
    if (inN(key.x) && memSet(u, key.k, ni)) out.g[key] = val;
  }
  for (const auto& mi : r.a)
    if (n.modelFamily.count(mi)) out.a.insert(mi);
  out.normalize(u);
  return out;
}

PCondition restrictToUncountable(const Universe& u, const PCondition& q, const ModelId& qi) {
  const auto& qm = u.uncountable(qi);
  PCondition out;
  out.s = q.s;
  auto inQ = [&](const DomainElement& x) {
    return x.isOrd() ? x.alpha() < qm.cut
                     : (!x.set().empty() && x.set().elems().back() < qm.cut);
  };
  for (const auto& [x, chain] : q.f) {
    if (inQ(x)) out.f[x] = chain;
  }
  for (const auto& [key, val] : q.g) {
    if (inQ(key.x)) out.g[key] = val;
  }
  for (const auto& mi : q.a)
    if (qm.modelFamily.count(mi)) out.a.insert(mi);
  out.normalize(u);
  return out;
}

}  // namespace oracle
