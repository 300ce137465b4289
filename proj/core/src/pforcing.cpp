#include "scf/pforcing.hpp"

namespace scf {

namespace {

bool elemInCountable(const Universe& u, const DomainElement& x, const CountableModel& n) {
  if (x.isOrd()) return n.trace.contains(x.alpha());
  return memSet(u, x.set(), n);
}

bool elemInUncountable(const DomainElement& x, const UncountableModel& q) {
  if (x.isOrd()) return x.alpha() < q.cut;
  return !x.set().empty() && x.set().sup() < q.cut;
}

bool setInCountable(const Universe& u, const TraceSet& k, const CountableModel& n) {
  return memSet(u, k, n);
}

bool setInUncountable(const TraceSet& k, const UncountableModel& q) {
  return !k.empty() && k.sup() < q.cut;
}

Chain sortedChain(Chain c) {
  std::sort(c.begin(), c.end(), chainLess);
  c.erase(std::unique(c.begin(), c.end()), c.end());
  return c;
}

Chain mergeChains(const Chain& a, const Chain& b) {
  Chain out = a;
  out.insert(out.end(), b.begin(), b.end());
  return sortedChain(std::move(out));
}

bool hullBetween(const Universe& u, const TraceSet& k, const TraceSet& t) {
  try {
    return hull(u, k, HullTarget::set(t));
  } catch (const Error&) {
    return false;
  }
}

const Chain& chainOrFail(const PCondition& p, const DomainElement& x, const char* who) {
  auto it = p.f.find(x);
  if (it == p.f.end())
    fail(Errc::UniverseDefect, std::string(who) + ": expected domain element " + x.str());
  return it->second;
}

}  // namespace

namespace {

/// First component of p that is not inside N; empty when p is contained.
std::string countableContainmentIssue(const Universe& u, const PCondition& p,
                                      const CountableModel& n) {
  for (const auto& m : p.a) {
    if (!n.modelFamily.count(m)) return "side condition " + m;
  }
  for (const auto& [x, chain] : p.f) {
    if (!elemInCountable(u, x, n)) return "domain element " + x.str();
    for (const auto& k : chain)
      if (!setInCountable(u, k, n)) return "chain member " + k.str();
  }
  for (const auto& [key, val] : p.g) {
    for (uint32_t xi : val)
      if (!n.trace.contains(xi)) return "g ordinal " + std::to_string(xi);
  }
  return "";
}

}  // namespace

bool conditionInCountable(const Universe& u, const PCondition& p, const ModelId& nId) {
  return countableContainmentIssue(u, p, u.countable(nId)).empty();
}

bool conditionInUncountable(const Universe& u, const PCondition& p, const ModelId& qId) {
  const auto& q = u.uncountable(qId);
  for (const auto& m : p.a) {
    if (!q.modelFamily.count(m)) return false;
  }
  for (const auto& [x, chain] : p.f) {
    if (!elemInUncountable(x, q)) return false;
    for (const auto& k : chain)
      if (!setInUncountable(k, q)) return false;
  }
  for (const auto& [key, val] : p.g) {
    for (uint32_t xi : val)
      if (xi >= q.cut) return false;
  }
  return true;
}

PCondition extendOrdinals(const Universe& u, const PCondition& p, const OrdVec& x) {
  OrdVec sset = stationarySet(u, p.s);
  OrdVec dom = p.domOrds();
  for (uint32_t alpha : x) {
    if (!ords::contains(sset, alpha))
      fail(Errc::DomainClash, std::to_string(alpha) + " is not a stationary ordinal");
    if (ords::contains(dom, alpha))
      fail(Errc::DomainClash, std::to_string(alpha) + " is already in the domain");
  }

  PCondition q = p;
  std::map<DomainElement, uint32_t> newSetOrigin;
  for (uint32_t alpha : x) {
    Chain chain;
    for (const auto& mId : p.a) {
      const auto& m = u.countable(mId);
      if (m.trace.contains(alpha)) chain.push_back(m.trace.restrictBelow(Ord::fin(alpha)));
    }
    chain = sortedChain(std::move(chain));
    q.f[DomainElement::ordS(alpha)] = chain;

    for (const TraceSet& t : chain) {
      DomainElement key = DomainElement::setElem(t);
      if (p.f.count(key))
        fail(Errc::UniverseDefect,
             "fresh trace " + t.str() + " collides with the existing domain");
      auto [it, inserted] = newSetOrigin.emplace(key, alpha);
      if (!inserted && it->second != alpha)
        fail(Errc::UniverseDefect, "fresh trace " + t.str() + " arises from two ordinals");
      if (!inserted) continue;
      Chain sub;
      for (const TraceSet& l : chain)
        if (hullBetween(u, l, t)) sub.push_back(l);
      q.f[key] = sortedChain(std::move(sub));
    }
  }
  q.normalize(u);
  return q;
}

PCondition saturateG(const Universe& u, const PCondition& p) {
  PCondition q = p;
  q.g.clear();
  for (const auto& [y, chain] : p.f) {
    for (const TraceSet& k : chain) {
      OrdVec val = p.gAt(k, y);
      for (const TraceSet& x : chain) {
        auto xt = p.f.find(DomainElement::setElem(x));
        if (xt == p.f.end()) continue;
        if (std::find(xt->second.begin(), xt->second.end(), k) != xt->second.end())
          val = ords::unite(val, p.gAt(k, DomainElement::setElem(x)));
      }
      if (!val.empty()) q.g[GKey{k, y}] = val;
    }
  }
  q.normalize(u);
  return q;
}

PCondition adjoinModel(const Universe& u, const PCondition& p, const ModelId& nId) {
  const auto& n = u.countable(nId);
  if (std::string issue = countableContainmentIssue(u, p, n); !issue.empty())
    fail(Errc::NotInModel, issue + " is not inside " + nId);

  PCondition q = p;
  q.a.insert(nId);
  for (uint32_t alpha : p.domOrds()) {
    // alpha is in trace(N) because the condition lives inside N.
    TraceSet cut = n.trace.restrictBelow(Ord::fin(alpha));
    DomainElement alphaE = DomainElement::ordS(alpha);
    DomainElement cutE = DomainElement::setElem(cut);
    Chain old = p.chainAt(alphaE);
    q.f[alphaE] = mergeChains(old, {cut});
    q.f[cutE] = old;
    for (const TraceSet& k : old) {
      OrdVec val = p.gAt(k, alphaE);
      if (!val.empty()) q.g[GKey{k, cutE}] = val;
    }
  }
  q.normalize(u);
  return q;
}

namespace {

PCondition closeUnder(const Universe& u, const PCondition& q, std::set<ModelId> closed) {
  OrdVec sset = stationarySet(u, q.s);
  OrdVec obligations = ords::intersect(rStar(u, closed), sset);
  OrdVec fresh = ords::diff(obligations, q.domOrds());
  PCondition r = extendOrdinals(u, q, fresh);
  r.a = std::move(closed);
  r.normalize(u);
  return r;
}

}  // namespace

PCondition closeUnderN(const Universe& u, const PCondition& q, const ModelId& n) {
  if (!q.a.count(n)) fail(Errc::PreconditionFailed, n + " is not a side condition of q");
  return closeUnder(u, q, closureUnderCountable(u, q.a, n));
}

PCondition closeUnderQ(const Universe& u, const PCondition& q, const ModelId& qId) {
  return closeUnder(u, q, closureUnderUncountable(u, q.a, qId));
}

bool inDN(const Universe& u, const PCondition& r, const ModelId& nId) {
  if (!r.a.count(nId)) return false;
  const auto& n = u.countable(nId);
  for (const auto& mId : r.a) {
    const auto& m = u.countable(mId);
    if (compare(u, m, n) != ModelRel::Less) continue;
    try {
      if (!r.a.count(intersectCountable(u, m, n).id)) return false;
    } catch (const Error&) {
      return false;
    }
  }
  // g must already be coherently saturated.
  for (const auto& [y, chain] : r.f) {
    for (const TraceSet& x : chain) {
      auto xt = r.f.find(DomainElement::setElem(x));
      if (xt == r.f.end()) continue;
      for (const TraceSet& k : xt->second) {
        if (!ords::subset(r.gAt(k, DomainElement::setElem(x)), r.gAt(k, y))) return false;
      }
    }
  }
  return true;
}

bool inDQ(const Universe& u, const PCondition& q, const ModelId& qId) {
  const auto& qm = u.uncountable(qId);
  for (const auto& mId : q.a) {
    try {
      if (!q.a.count(intersectWithUncountable(u, u.countable(mId), qm).id)) return false;
    } catch (const Error&) {
      return false;
    }
  }
  return true;
}

PCondition restrictToUncountable(const Universe& u, const PCondition& q, const ModelId& qId) {
  const auto& qm = u.uncountable(qId);
  if (!qm.simple) fail(Errc::PreconditionFailed, qId + " is not simple");
  if (!inDQ(u, q, qId)) fail(Errc::NotInDClass, "condition is not in D_" + qId);

  PCondition out;
  out.s = q.s;
  for (const auto& [x, chain] : q.f) {
    if (elemInUncountable(x, qm)) out.f[x] = chain;
  }
  for (const auto& [key, val] : q.g) {
    if (elemInUncountable(key.x, qm)) out.g[key] = val;
  }
  for (const auto& mId : q.a) {
    if (qm.modelFamily.count(mId)) out.a.insert(mId);
  }
  out.normalize(u);
  return out;
}

PCondition restrictToCountable(const Universe& u, const PCondition& r, const ModelId& nId) {
  const auto& n = u.countable(nId);
  if (!n.simple) fail(Errc::PreconditionFailed, nId + " is not simple");
  if (!inDN(u, r, nId)) fail(Errc::NotInDClass, "condition is not in D_" + nId);

  PCondition out;
  out.s = r.s;
  for (const auto& [x, chain] : r.f) {
    if (!elemInCountable(u, x, n)) continue;
    Chain cut;
    for (const TraceSet& k : chain)
      if (setInCountable(u, k, n)) cut.push_back(k);
    out.f[x] = sortedChain(std::move(cut));
  }
  for (const auto& [key, val] : r.g) {
    if (elemInCountable(u, key.x, n) && setInCountable(u, key.k, n)) out.g[key] = val;
  }
  for (const auto& mId : r.a) {
    if (n.modelFamily.count(mId)) out.a.insert(mId);
  }
  out.normalize(u);
  return out;
}

namespace {

/// g(K,x) := union of g_w(K,y) ∪ g_other(K,y) over y with x = y or x ∈ f(y).
void assembleG(const Universe&, const PCondition& w, const PCondition& other,
               PCondition& out) {
  out.g.clear();
  for (const auto& [x, chain] : out.f) {
    for (const TraceSet& k : chain) {
      OrdVec val = ords::unite(w.gAt(k, x), other.gAt(k, x));
      for (const auto& [y, ychain] : out.f) {
        if (x.isOrd() || y == x) continue;
        if (std::find(ychain.begin(), ychain.end(), x.set()) == ychain.end()) continue;
        val = ords::unite(val, ords::unite(w.gAt(k, y), other.gAt(k, y)));
      }
      if (!val.empty()) out.g[GKey{k, x}] = val;
    }
  }
}

}  // namespace

PCondition amalgUncountable(const Universe& u, const PCondition& w, const PCondition& q,
                            const ModelId& qId, Counters* counters) {
  if (!(w.s == q.s)) fail(Errc::PreconditionFailed, "stationary sets differ");
  const auto& qm = u.uncountable(qId);
  if (!qm.simple) fail(Errc::PreconditionFailed, qId + " is not simple");
  if (!inDQ(u, q, qId)) fail(Errc::PreconditionFailed, "q is not in D_" + qId);
  if (!conditionInUncountable(u, w, qId))
    fail(Errc::PreconditionFailed, "w is not contained in " + qId);
  if (!leqP(u, w, restrictToUncountable(u, q, qId)))
    fail(Errc::PreconditionFailed, "w is not below q|" + qId);

  auto hit = [&](const char* key) {
    if (counters) ++(*counters)[key];
  };

  PCondition out;
  out.s = q.s;
  out.a = w.a;
  out.a.insert(q.a.begin(), q.a.end());

  // Domain: dom(f_w) ∪ dom(f_q); values by the three cases.
  for (const auto& [x, chain] : w.f) out.f[x] = chain;
  for (const auto& [x, chain] : q.f) {
    if (w.f.count(x)) {
      hit("uamalg-case1");
      continue;  // value from w
    }
    Chain inQ;
    for (const TraceSet& k : chain)
      if (setInUncountable(k, qm)) inQ.push_back(k);
    if (inQ.empty()) {
      hit("uamalg-case2");
      out.f[x] = chain;
    } else {
      hit("uamalg-case3");
      const TraceSet& largest = inQ.back();
      out.f[x] = mergeChains(chain, chainOrFail(w, DomainElement::setElem(largest), "amalgQ"));
    }
  }

  assembleG(u, w, q, out);
  out.normalize(u);
  return out;
}

PCondition amalgCountable(const Universe& u, const PCondition& w, const PCondition& r,
                          const ModelId& nId, Counters* counters) {
  if (!(w.s == r.s)) fail(Errc::PreconditionFailed, "stationary sets differ");
  const auto& n = u.countable(nId);
  if (!n.simple) fail(Errc::PreconditionFailed, nId + " is not simple");
  if (!inDN(u, r, nId)) fail(Errc::PreconditionFailed, "r is not in D_" + nId);
  if (!conditionInCountable(u, w, nId))
    fail(Errc::PreconditionFailed, "w is not contained in " + nId);
  if (!leqP(u, w, restrictToCountable(u, r, nId)))
    fail(Errc::PreconditionFailed, "w is not below r|" + nId);

  auto hit = [&](const char* key) {
    if (counters) ++(*counters)[key];
  };

  OrdVec sset = stationarySet(u, r.s);
  OrdVec wOrds = w.domOrds();
  OrdVec rOrds = r.domOrds();

  PCondition out;
  out.s = r.s;
  out.a = w.a;
  out.a.insert(r.a.begin(), r.a.end());

  // Cases 1-3: elements of dom(f_w).
  for (const auto& [x, chain] : w.f) {
    if (!x.isOrd()) {
      hit("amalg-case1");
      out.f[x] = chain;
      continue;
    }
    uint32_t alpha = x.alpha();
    if (ords::contains(rOrds, alpha)) {
      hit("amalg-case2");
      out.f[x] = mergeChains(chain, r.chainAt(x));
    } else {
      hit("amalg-case3");
      Chain extra;
      for (const auto& mId : r.a) {
        const auto& m = u.countable(mId);
        if (!m.trace.contains(alpha)) continue;
        if (!lessOrEquiv(compare(u, n, m))) continue;
        if (mId == nId) hit("amalg-case3-selfmodel");
        extra.push_back(m.trace.restrictBelow(Ord::fin(alpha)));
      }
      out.f[x] = mergeChains(chain, sortedChain(std::move(extra)));
    }
  }

  // Cases 4-6: elements of dom(f_r) outside dom(f_w) (hence outside N).
  for (const auto& [x, chain] : r.f) {
    if (w.f.count(x)) continue;
    OrdVec case4Alphas;
    for (uint32_t alpha : rOrds) {
      if (!ords::contains(sset, alpha) || !n.trace.contains(alpha)) continue;
      TraceSet cut = n.trace.restrictBelow(Ord::fin(alpha));
      bool hitsX = (!x.isOrd() && x.set() == cut) ||
                   std::find(chain.begin(), chain.end(), cut) != chain.end();
      if (hitsX) case4Alphas.push_back(alpha);
    }
    if (case4Alphas.size() > 1)
      fail(Errc::AmbiguousCase,
           "several ordinals witness case 4 at " + x.str() + " (universe defect)");
    if (case4Alphas.size() == 1) {
      hit("amalg-case4");
      out.f[x] =
          mergeChains(chainOrFail(w, DomainElement::ordS(case4Alphas[0]), "amalgN"), chain);
      continue;
    }
    Chain inN;
    for (const TraceSet& k : chain)
      if (setInCountable(u, k, n)) inN.push_back(k);
    if (inN.empty()) {
      hit("amalg-case5");
      out.f[x] = chain;
    } else {
      hit("amalg-case6");
      const TraceSet& largest = inN.back();
      out.f[x] = mergeChains(chain, chainOrFail(w, DomainElement::setElem(largest), "amalgN"));
    }
  }

  // Case 7: fresh traces M ∩ alpha for side-condition models at or above N.
  std::map<DomainElement, uint32_t> freshOrigin;
  for (const auto& mId : r.a) {
    const auto& m = u.countable(mId);
    if (!lessOrEquiv(compare(u, n, m))) continue;
    for (uint32_t alpha : wOrds) {
      if (!ords::contains(sset, alpha) || !m.trace.contains(alpha)) continue;
      if (ords::contains(rOrds, alpha)) continue;
      TraceSet t = m.trace.restrictBelow(Ord::fin(alpha));
      DomainElement key = DomainElement::setElem(t);
      if (w.f.count(key) || r.f.count(key))
        fail(Errc::UniverseDefect,
             "case-7 trace " + t.str() + " collides with an input domain");
      auto [it, inserted] = freshOrigin.emplace(key, alpha);
      if (!inserted) {
        if (it->second != alpha)
          fail(Errc::AmbiguousCase, "case-7 trace " + t.str() + " from two ordinals");
        continue;
      }
      hit("amalg-case7");
      if (mId == nId) hit("amalg-case7-selfmodel");
      Chain sub;
      for (const TraceSet& l : out.f.at(DomainElement::ordS(alpha)))
        if (hullBetween(u, l, t)) sub.push_back(l);
      out.f[key] = sortedChain(std::move(sub));
    }
  }

  assembleG(u, w, r, out);
  out.normalize(u);
  return out;
}

}  // namespace scf
