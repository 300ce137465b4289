#include "scf/pcondition.hpp"

#include "scf/pforcing.hpp"

namespace scf {

OrdVec stationarySet(const Universe& u, const StationaryRef& ref) {
  return ref.isUnion ? u.unionStationary() : u.stationary(ref.coord);
}

const Chain& PCondition::chainAt(const DomainElement& x) const {
  auto it = f.find(x);
  if (it == f.end()) fail(Errc::UnknownId, "no domain element " + x.str());
  return it->second;
}

OrdVec PCondition::gAt(const TraceSet& k, const DomainElement& x) const {
  auto it = g.find(GKey{k, x});
  return it == g.end() ? OrdVec{} : it->second;
}

OrdVec PCondition::domOrds() const {
  OrdVec out;
  for (const auto& [x, _] : f)
    if (x.isOrd()) out.push_back(x.alpha());
  return out;
}

std::vector<TraceSet> PCondition::domSets() const {
  std::vector<TraceSet> out;
  for (const auto& [x, _] : f)
    if (!x.isOrd()) out.push_back(x.set());
  return out;
}

namespace {

/// Canonical witness: least (model, alpha) with the model in the side
/// conditions, alpha a domain S-ordinal of the model's trace or kappa, and
/// trace(model) ∩ alpha equal to the element. Kappa sorts after finite cuts.
std::optional<Witness> canonicalWitness(const Universe& u, const PCondition& p,
                                        const TraceSet& t) {
  OrdVec sset = stationarySet(u, p.s);
  OrdVec dom = p.domOrds();
  for (const auto& mId : p.a) {
    if (!u.hasCountable(mId)) continue;
    const auto& m = u.countable(mId);
    for (uint32_t alpha : dom) {
      if (!ords::contains(sset, alpha) || !m.trace.contains(alpha)) continue;
      if (m.trace.restrictBelow(Ord::fin(alpha)) == t) return Witness{mId, Ord::fin(alpha)};
    }
    if (m.trace == t) return Witness{mId, Ord::kappa()};
  }
  return std::nullopt;
}

Chain sortedChain(Chain c) {
  std::sort(c.begin(), c.end(), chainLess);
  c.erase(std::unique(c.begin(), c.end()), c.end());
  return c;
}

}  // namespace

void PCondition::normalize(const Universe& u) {
  std::map<DomainElement, Chain> nf;
  for (auto& [x, chain] : f) {
    DomainElement key = x;
    if (!key.isOrd()) key.setWitness(std::nullopt);
    nf[key] = sortedChain(chain);
  }
  f = std::move(nf);

  std::map<GKey, OrdVec> ng;
  for (auto& [key, val] : g) {
    OrdVec v = ords::normalized(val);
    if (v.empty()) continue;
    GKey k = key;
    if (!k.x.isOrd()) k.x.setWitness(std::nullopt);
    ng[k] = std::move(v);
  }
  g = std::move(ng);

  // Recompute witnesses after the domain is final.
  std::map<DomainElement, Chain> wf;
  for (auto& [x, chain] : f) {
    DomainElement key = x;
    if (!key.isOrd()) key.setWitness(canonicalWitness(u, *this, key.set()));
    wf[key] = std::move(chain);
  }
  f = std::move(wf);
  std::map<GKey, OrdVec> wg;
  for (auto& [key, val] : g) {
    GKey k = key;
    if (!k.x.isOrd()) k.x.setWitness(canonicalWitness(u, *this, k.x.set()));
    wg[k] = std::move(val);
  }
  g = std::move(wg);
}

bool operator==(const PCondition& p, const PCondition& q) {
  if (!(p.s == q.s) || p.a != q.a) return false;
  if (p.f.size() != q.f.size() || p.g.size() != q.g.size()) return false;
  auto witEq = [](const std::optional<Witness>& a, const std::optional<Witness>& b) {
    if (a.has_value() != b.has_value()) return false;
    return !a || (a->model == b->model && a->alpha == b->alpha);
  };
  for (auto it = p.f.begin(), jt = q.f.begin(); it != p.f.end(); ++it, ++jt) {
    if (!(it->first == jt->first) || it->second != jt->second) return false;
    if (!witEq(it->first.witness(), jt->first.witness())) return false;
  }
  for (auto it = p.g.begin(), jt = q.g.begin(); it != p.g.end(); ++it, ++jt) {
    if (!(it->first == jt->first) || it->second != jt->second) return false;
  }
  return true;
}

namespace {

struct PValidator {
  const Universe& u;
  const PCondition& p;
  OrdVec sset;
  std::vector<ClauseViolation> out;

  void add(const char* clause, const std::string& witness) {
    out.push_back({clause, witness});
  }

  bool inHullOfElem(const TraceSet& k, const DomainElement& x) {
    if (x.isOrd()) return hull(u, k, HullTarget::cut(Ord::fin(x.alpha())));
    try {
      return hull(u, k, HullTarget::set(x.set()));
    } catch (const Error&) {
      return false;
    }
  }

  void c1() {
    for (const auto& m : p.a) u.countable(m);  // UnknownId propagates
    if (!isAdequate(u, p.a)) add("C1", "side conditions are not adequate");
  }

  void c2() {
    for (const auto& [x, chain] : p.f) {
      if (x.isOrd()) {
        if (!ords::contains(sset, x.alpha()))
          add("C2", "domain ordinal " + x.str() + " not in the stationary set");
      } else {
        bool witnessed = false;
        for (const auto& mId : p.a) {
          const auto& m = u.countable(mId);
          if (m.trace == x.set()) witnessed = true;
          for (uint32_t alpha : p.domOrds()) {
            if (!ords::contains(sset, alpha) || !m.trace.contains(alpha)) continue;
            if (m.trace.restrictBelow(Ord::fin(alpha)) == x.set()) witnessed = true;
          }
        }
        if (!witnessed) add("C2", "set element " + x.str() + " has no provenance");
        if (x.set().empty()) add("C2", "empty set element");
      }
      // Chains: strictly sup-increasing, hull-ordered, inside the hull of x.
      for (size_t i = 0; i < chain.size(); ++i) {
        if (chain[i].empty()) {
          add("C2", "empty chain member under " + x.str());
          continue;
        }
        if (i + 1 < chain.size() && chain[i].sup() >= chain[i + 1].sup())
          add("C2", "chain under " + x.str() + " not strictly sup-increasing");
        if (!inHullOfElem(chain[i], x))
          add("C2", "chain member " + chain[i].str() + " not in the hull of " + x.str());
        for (size_t j = i + 1; j < chain.size(); ++j) {
          if (!inHullOfElem(chain[i], DomainElement::setElem(chain[j])))
            add("C2", "chain under " + x.str() + ": " + chain[i].str() +
                          " not in the hull of " + chain[j].str());
        }
      }
    }
  }

  void c3() {
    for (const auto& [x, chain] : p.f) {
      for (const TraceSet& k : chain) {
        DomainElement ke = DomainElement::setElem(k);
        auto it = p.f.find(ke);
        if (it == p.f.end()) {
          add("C3", "chain member " + k.str() + " of " + x.str() + " not in the domain");
          continue;
        }
        Chain expected;
        for (const TraceSet& l : chain) {
          if (inHullOfElem(l, ke)) expected.push_back(l);
        }
        if (it->second != expected)
          add("C3", "chain of " + k.str() + " differs from the hull restriction of " + x.str());
      }
    }
  }

  OrdVec keyAbove(const DomainElement& x, uint32_t supK) {
    OrdVec out;
    if (x.isOrd()) {
      for (uint32_t v = supK; v < x.alpha(); ++v) out.push_back(v);
    } else {
      for (uint32_t v : x.set().elems())
        if (v >= supK) out.push_back(v);
    }
    return out;
  }

  void c4() {
    for (const auto& [key, val] : p.g) {
      auto it = p.f.find(key.x);
      bool inChain = false;
      if (it != p.f.end())
        inChain = std::find(it->second.begin(), it->second.end(), key.k) != it->second.end();
      if (!inChain) {
        add("C4", "g pair (" + key.k.str() + "," + key.x.str() + ") without chain membership");
        continue;
      }
      if (val.empty()) continue;  // normalized forms never store these
      OrdVec allowed = keyAbove(key.x, key.k.empty() ? 0 : key.k.sup());
      if (!ords::subset(val, allowed))
        add("C4", "g(" + key.k.str() + "," + key.x.str() + ") leaves the window");
    }
  }

  void c5() {
    for (const auto& [x, chain] : p.f) {
      for (const TraceSet& l : chain) {
        auto lt = p.f.find(DomainElement::setElem(l));
        if (lt == p.f.end()) continue;  // reported by C3
        for (const TraceSet& k : lt->second) {
          OrdVec outer = p.gAt(k, x);
          OrdVec inner = p.gAt(k, DomainElement::setElem(l));
          if (!ords::subset(outer, inner))
            add("C5", "g(" + k.str() + "," + x.str() + ") not within g(" + k.str() + "," +
                          l.str() + ")");
        }
      }
    }
  }

  void c6() {
    for (const auto& [x, chain] : p.f) {
      if (!x.isOrd()) continue;
      for (const auto& mId : p.a) {
        const auto& m = u.countable(mId);
        if (!m.trace.contains(x.alpha())) continue;
        TraceSet cut = m.trace.restrictBelow(Ord::fin(x.alpha()));
        if (std::find(chain.begin(), chain.end(), cut) == chain.end())
          add("C6", mId + " ∩ " + x.str() + " missing from the chain of " + x.str());
      }
    }
  }

  void c7() {
    OrdVec obligations = ords::intersect(rStar(u, p.a), sset);
    for (uint32_t gamma : obligations) {
      if (!p.hasElem(DomainElement::ordS(gamma)))
        add("C7", "remainder ordinal " + std::to_string(gamma) + " not in the domain");
    }
  }
};

}  // namespace

std::vector<ClauseViolation> validateP(const Universe& u, const PCondition& p) {
  PValidator v{u, p, stationarySet(u, p.s), {}};
  v.c1();
  v.c2();
  v.c3();
  v.c4();
  v.c5();
  v.c6();
  v.c7();
  return std::move(v.out);
}

std::vector<ClauseViolation> leqExplainP(const Universe&, const PCondition& q,
                                         const PCondition& p) {
  if (!(q.s == p.s))
    fail(Errc::PreconditionFailed, "conditions range over different stationary sets");
  std::vector<ClauseViolation> out;
  for (const auto& m : p.a) {
    if (!q.a.count(m)) out.push_back({"a", "side condition " + m + " dropped"});
  }
  for (const auto& [x, chain] : p.f) {
    auto it = q.f.find(x);
    if (it == q.f.end()) {
      out.push_back({"b", "domain element " + x.str() + " dropped"});
      continue;
    }
    for (const TraceSet& k : chain) {
      if (std::find(it->second.begin(), it->second.end(), k) == it->second.end())
        out.push_back({"b", "chain member " + k.str() + " of " + x.str() + " dropped"});
    }
  }
  for (const auto& [key, val] : p.g) {
    if (!ords::subset(val, q.gAt(key.k, key.x)))
      out.push_back({"c", "g(" + key.k.str() + "," + key.x.str() + ") shrank"});
  }
  for (const auto& [x, _] : p.f) {
    auto qt = q.f.find(x);
    if (qt == q.f.end()) continue;
    for (const TraceSet& k : qt->second) {
      if (!p.hasSet(k)) continue;
      const Chain& pc = p.chainAt(x);
      if (std::find(pc.begin(), pc.end(), k) == pc.end())
        out.push_back({"d", "new chain member " + k.str() + " under old element " + x.str()});
    }
  }
  return out;
}

bool leqP(const Universe& u, const PCondition& q, const PCondition& p) {
  return leqExplainP(u, q, p).empty();
}

}  // namespace scf
