#include "scf/qforcing.hpp"

namespace scf {

namespace {

std::set<uint32_t> modelIndexSet(const Universe& u, const ModelRef& m) {
  return m.isCountable ? u.countable(m.id).indexSet : u.uncountable(m.id).indexSet;
}

bool modelMember(const Universe& u, const ModelRef& outer, const ModelId& inner) {
  return outer.isCountable ? u.countable(outer.id).modelFamily.count(inner) != 0
                           : u.uncountable(outer.id).modelFamily.count(inner) != 0;
}

bool modelSimple(const Universe& u, const ModelRef& m) {
  return m.isCountable ? u.countable(m.id).simple : u.uncountable(m.id).simple;
}

}  // namespace

std::vector<ClauseViolation> validateQ(const Universe& u, const QCondition& p) {
  std::vector<ClauseViolation> out;
  for (const auto& m : p.a) u.countable(m);  // UnknownId propagates
  if (!isAdequate(u, p.a)) out.push_back({"Q1", "side conditions are not adequate"});

  for (const auto& [i, cond] : p.fBig) {
    if (i >= u.config.lambdaStar) {
      out.push_back({"Q2", "coordinate " + std::to_string(i) + " out of range"});
      continue;
    }
    if (cond.s.isUnion || cond.s.coord != i) {
      out.push_back({"Q3", "coordinate " + std::to_string(i) +
                               " carries a condition over S_" + cond.s.str()});
      continue;
    }
    for (const auto& v : validateP(u, cond)) {
      out.push_back({"Q3", "coordinate " + std::to_string(i) + ": " + v.clause + " " +
                               v.witness});
    }
    for (const auto& mId : p.a) {
      if (u.countable(mId).indexSet.count(i) && !cond.a.count(mId))
        out.push_back({"Q3", "coordinate " + std::to_string(i) + ": indexed model " + mId +
                                 " missing from its side conditions"});
    }
  }

  for (uint32_t i : sStar(u, p.a)) {
    if (!p.fBig.count(i))
      out.push_back({"Q4", "obligation index " + std::to_string(i) + " not in the domain"});
  }
  return out;
}

std::vector<ClauseViolation> leqExplainQ(const Universe& u, const QCondition& q,
                                         const QCondition& p) {
  std::vector<ClauseViolation> out;
  for (const auto& m : p.a) {
    if (!q.a.count(m)) out.push_back({"a", "side condition " + m + " dropped"});
  }
  for (const auto& [i, cond] : p.fBig) {
    auto it = q.fBig.find(i);
    if (it == q.fBig.end()) {
      out.push_back({"b", "coordinate " + std::to_string(i) + " dropped"});
      continue;
    }
    for (const auto& v : leqExplainP(u, it->second, cond)) {
      out.push_back({"c", "coordinate " + std::to_string(i) + ": (" + v.clause + ") " +
                              v.witness});
    }
  }
  return out;
}

bool leqQ(const Universe& u, const QCondition& q, const QCondition& p) {
  return leqExplainQ(u, q, p).empty();
}

QCondition uplus(const Universe& u, const QCondition& p, const OrdVec& x) {
  for (uint32_t i : x) {
    if (p.fBig.count(i))
      fail(Errc::DomainClash, "coordinate " + std::to_string(i) + " already present");
    if (i >= u.config.lambdaStar)
      fail(Errc::DomainClash, "coordinate " + std::to_string(i) + " out of range");
  }
  QCondition out = p;
  for (uint32_t i : x) {
    PCondition empty;
    empty.s = StationaryRef::coordSet(i);
    for (const auto& mId : p.a) {
      if (u.countable(mId).indexSet.count(i)) empty.a.insert(mId);
    }
    out.fBig[i] = std::move(empty);
  }
  out.normalize(u);
  return out;
}

QCondition lowerCoordinates(const Universe& u, const QCondition& p,
                            const std::map<uint32_t, PCondition>& repl) {
  QCondition out = p;
  for (const auto& [i, cond] : repl) {
    auto it = p.fBig.find(i);
    if (it == p.fBig.end())
      fail(Errc::PreconditionFailed, "coordinate " + std::to_string(i) + " not in the domain");
    if (!leqP(u, cond, it->second))
      fail(Errc::PreconditionFailed,
           "replacement at " + std::to_string(i) + " is not stronger");
    out.fBig[i] = cond;
  }
  out.normalize(u);
  return out;
}

bool inDNQ(const Universe& u, const QCondition& p, const ModelId& nId) {
  if (!p.a.count(nId)) return false;
  const auto& n = u.countable(nId);
  for (const auto& mId : p.a) {
    const auto& m = u.countable(mId);
    if (compare(u, m, n) != ModelRel::Less) continue;
    try {
      if (!p.a.count(intersectCountable(u, m, n).id)) return false;
    } catch (const Error&) {
      return false;
    }
  }
  for (const auto& [i, cond] : p.fBig) {
    if (n.indexSet.count(i) && !inDN(u, cond, nId)) return false;
  }
  return true;
}

bool inDPQ(const Universe& u, const QCondition& p, const ModelId& pId) {
  const auto& pm = u.uncountable(pId);
  for (const auto& mId : p.a) {
    try {
      if (!p.a.count(intersectWithUncountable(u, u.countable(mId), pm).id)) return false;
    } catch (const Error&) {
      return false;
    }
  }
  for (const auto& [i, cond] : p.fBig) {
    if (pm.indexSet.count(i) && !inDQ(u, cond, pId)) return false;
  }
  return true;
}

bool inDClassQ(const Universe& u, const QCondition& p, const ModelRef& m) {
  return m.isCountable ? inDNQ(u, p, m.id) : inDPQ(u, p, m.id);
}

bool qconditionInModel(const Universe& u, const QCondition& p, const ModelRef& m) {
  auto idx = modelIndexSet(u, m);
  for (const auto& mId : p.a) {
    if (!modelMember(u, m, mId)) return false;
  }
  for (const auto& [i, cond] : p.fBig) {
    if (!idx.count(i)) return false;
    bool inside = m.isCountable ? conditionInCountable(u, cond, m.id)
                                : conditionInUncountable(u, cond, m.id);
    if (!inside) return false;
  }
  return true;
}

QCondition restrictQ(const Universe& u, const QCondition& q, const ModelRef& m) {
  if (q.isMax()) return q;  // degenerate inputs restrict to themselves
  if (!modelSimple(u, m)) fail(Errc::PreconditionFailed, m.id + " is not simple");
  if (!inDClassQ(u, q, m)) fail(Errc::NotInDClass, "condition is not in D(" + m.id + ")");
  auto idx = modelIndexSet(u, m);

  QCondition out;
  for (const auto& mId : q.a) {
    if (modelMember(u, m, mId)) out.a.insert(mId);
  }
  for (const auto& [i, cond] : q.fBig) {
    if (!idx.count(i)) continue;
    out.fBig[i] = m.isCountable ? restrictToCountable(u, cond, m.id)
                                : restrictToUncountable(u, cond, m.id);
  }
  out.normalize(u);
  return out;
}

OplusQResult oplusQ(const Universe& u, const QCondition& w, const QCondition& q,
                    const ModelRef& m, Counters* counters) {
  if (!modelSimple(u, m)) fail(Errc::PreconditionFailed, m.id + " is not simple");
  if (!inDClassQ(u, q, m)) fail(Errc::PreconditionFailed, "q is not in D(" + m.id + ")");
  if (!qconditionInModel(u, w, m))
    fail(Errc::PreconditionFailed, "w is not contained in " + m.id);
  if (!leqQ(u, w, restrictQ(u, q, m)))
    fail(Errc::PreconditionFailed, "w is not below q|" + m.id);

  OplusQResult res;
  OrdVec missing = ords::diff(w.indexDomain(), q.indexDomain());
  const QCondition* base = &q;
  QCondition widened;
  if (!missing.empty()) {
    widened = uplus(u, q, missing);
    base = &widened;
    res.normalized = true;
    res.addedIndices = missing;
  }

  QCondition out;
  out.a = w.a;
  out.a.insert(base->a.begin(), base->a.end());
  for (const auto& [i, cond] : base->fBig) {
    auto wt = w.fBig.find(i);
    if (wt == w.fBig.end()) {
      out.fBig[i] = cond;
    } else if (m.isCountable) {
      out.fBig[i] = amalgCountable(u, wt->second, cond, m.id, counters);
    } else {
      out.fBig[i] = amalgUncountable(u, wt->second, cond, m.id, counters);
    }
  }
  out.normalize(u);
  res.cond = std::move(out);
  return res;
}

PCondition projectCoordinate(const Universe&, const QCondition& q, uint32_t i) {
  if (q.isMax()) {
    PCondition maxP;
    maxP.s = StationaryRef::coordSet(i);
    return maxP;
  }
  auto it = q.fBig.find(i);
  if (it == q.fBig.end())
    fail(Errc::CoordinateMissing, "coordinate " + std::to_string(i) + " not in the domain");
  return it->second;
}

}  // namespace scf
