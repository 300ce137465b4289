#include "scf/harness/catalog.hpp"

#include "scf/qforcing.hpp"

namespace scf::harness {

namespace {

Bundle skipBundle() {
  Bundle b;
  b.nums["skip"] = 1;
  return b;
}
bool skipped(const Bundle& b) { return b.nums.count("skip") != 0; }

using GenFn = std::function<Bundle(SplitMix64&, const GenParams&)>;

std::function<Bundle(uint64_t, const GenParams&)> gen(GenFn fn) {
  return [fn](uint64_t seed, const GenParams& prm) -> Bundle {
    SplitMix64 rng = SplitMix64::forTrial(seed, 0x517);
    rng.state ^= seed;
    rng.next();
    try {
      return fn(rng, prm);
    } catch (const Error&) {
      return skipBundle();
    }
  };
}

std::vector<Ord> lambdaCuts(const Universe& u) {
  std::vector<Ord> cuts;
  for (uint32_t lam : u.config.lambdaSet) cuts.push_back(Ord::fin(lam));
  cuts.push_back(Ord::kappa());
  return cuts;
}

ModelRel cmp(const Universe& u, const CountableModel& m, const CountableModel& n) {
  return compare(u, m, n);
}

bool chainHas(const Chain& c, const TraceSet& t) {
  return std::find(c.begin(), c.end(), t) != c.end();
}

bool elemInC(const Universe& u, const DomainElement& x, const CountableModel& n) {
  return x.isOrd() ? n.trace.contains(x.alpha()) : memSet(u, x.set(), n);
}

bool elemInU(const DomainElement& x, const UncountableModel& p) {
  return x.isOrd() ? x.alpha() < p.cut : (!x.set().empty() && x.set().sup() < p.cut);
}

const CountableModel* interC(const Universe& u, const CountableModel& m,
                             const CountableModel& n) {
  try {
    return &intersectCountable(u, m, n);
  } catch (const Error&) {
    return nullptr;
  }
}

const CountableModel* interU(const Universe& u, const CountableModel& m,
                             const UncountableModel& p) {
  try {
    return &intersectWithUncountable(u, m, p);
  } catch (const Error&) {
    return nullptr;
  }
}

std::vector<ModelId> sortedCountables(const Universe& u) {
  std::vector<ModelId> out;
  for (const auto& [id, _] : u.countables) out.push_back(id);
  return out;
}

/// Deterministic greedy adequate subset of `pool` (which is iterated in
/// order), optionally seeded.
std::vector<ModelId> greedyAdequate(const Universe& u, const std::vector<ModelId>& pool,
                                    const std::vector<ModelId>& seed, size_t cap) {
  std::vector<ModelId> out = seed;
  for (const auto& id : pool) {
    if (out.size() >= cap) break;
    if (std::find(out.begin(), out.end(), id) != out.end()) continue;
    bool ok = true;
    for (const auto& have : out)
      ok &= cmp(u, u.countable(id), u.countable(have)) != ModelRel::Incomparable;
    if (ok) out.push_back(id);
  }
  return out;
}

std::set<ModelId> asSet(const std::vector<ModelId>& v) { return {v.begin(), v.end()}; }

std::optional<ModelId> pickSimpleCountable(const Universe& u, SplitMix64& rng,
                                           bool needFamily = true) {
  std::vector<ModelId> pool;
  for (const auto& id : simpleCountables(u)) {
    if (!needFamily || !u.countable(id).modelFamily.empty()) pool.push_back(id);
  }
  if (pool.empty()) return std::nullopt;
  return pool[rng.below(pool.size())];
}

std::optional<ModelId> pickSimpleUncountable(const Universe& u, SplitMix64& rng) {
  auto pool = simpleUncountables(u);
  if (pool.empty()) return std::nullopt;
  return pool[rng.below(pool.size())];
}

// ---------------------------------------------------------------------------
// Shared bundle generators.
// ---------------------------------------------------------------------------

Bundle genUniverse(SplitMix64& rng, const GenParams& prm) {
  Bundle b;
  b.u = trialUniverse(rng, prm);
  return b;
}

Bundle genCond(SplitMix64& rng, const GenParams& prm) {
  Bundle b;
  b.u = trialUniverse(rng, prm);
  b.pconds["r"] = buildP(b.u, StationaryRef::unionSet(), rng, 10);
  return b;
}

/// Countable amalgamation scenario: N simple, r in D_N, w inside N below r|N.
Bundle genAmalgN(SplitMix64& rng, const GenParams& prm, bool withMiddle) {
  Bundle b;
  b.u = trialUniverse(rng, prm);
  auto nId = pickSimpleCountable(b.u, rng);
  if (!nId) return skipBundle();
  InsideModel inN{ModelRef::countable(*nId)};
  PCondition p0 = buildP(b.u, StationaryRef::unionSet(), rng, 3, inN);
  PCondition r0 = adjoinModel(b.u, p0, *nId);
  PCondition r1 = strengthenPInside(b.u, r0, rng, 3, {});
  PCondition r = makeDN(b.u, r1, *nId);
  PCondition base = restrictToCountable(b.u, r, *nId);
  b.picks["N"] = *nId;
  b.pconds["r"] = r;
  OrdVec freshInN;
  for (uint32_t v : ords::diff(stationarySet(b.u, r.s), r.domOrds()))
    if (b.u.countable(*nId).trace.contains(v)) freshInN.push_back(v);
  if (!freshInN.empty()) {
    try {
      base = extendOrdinals(b.u, base, {freshInN[rng.below(freshInN.size())]});
    } catch (const Error&) {
    }
  }
  if (withMiddle) {
    PCondition v = strengthenPInside(b.u, base, rng, 2, inN);
    b.pconds["v"] = v;
    b.pconds["w"] = strengthenPInside(b.u, v, rng, 3, inN);
  } else {
    b.pconds["w"] = strengthenPInside(b.u, base, rng, 4, inN);
  }
  return b;
}

/// Uncountable amalgamation scenario: Q simple, q in D_Q, w inside Q.
Bundle genAmalgQ(SplitMix64& rng, const GenParams& prm) {
  GenParams tuned = prm;
  tuned.maxUncountables = std::max<uint32_t>(tuned.maxUncountables, 1);
  tuned.minUncountables = 1;
  Bundle b;
  b.u = trialUniverse(rng, tuned);
  auto qId = pickSimpleUncountable(b.u, rng);
  if (!qId) return skipBundle();
  PCondition r = buildP(b.u, StationaryRef::unionSet(), rng, 5);
  PCondition q = makeDQ(b.u, r, *qId);
  PCondition base = restrictToUncountable(b.u, q, *qId);
  b.picks["Q"] = *qId;
  b.pconds["q"] = q;
  b.pconds["w"] = strengthenPInside(b.u, base, rng, 4, InsideModel{ModelRef::uncountable(*qId)});
  return b;
}

/// Both-restrictions scenario for the single forcing: N simple countable,
/// Q simple uncountable with its cut inside N and outside the stationary set.
Bundle genCommute86(SplitMix64& rng, const GenParams& prm) {
  GenParams tuned = prm;
  tuned.maxUncountables = std::max<uint32_t>(tuned.maxUncountables, 1);
  tuned.minUncountables = 1;
  tuned.lowCutPct = 95;
  Bundle b;
  b.u = trialUniverse(rng, tuned);
  OrdVec sset = b.u.unionStationary();
  std::vector<std::pair<ModelId, ModelId>> pairs;
  for (const auto& nId : simpleCountables(b.u)) {
    const auto& n = b.u.countable(nId);
    for (const auto& qId : simpleUncountables(b.u)) {
      const auto& q = b.u.uncountable(qId);
      if (n.trace.contains(q.cut) && !ords::contains(sset, q.cut)) pairs.emplace_back(nId, qId);
    }
  }
  if (pairs.empty()) return skipBundle();
  auto [nId, qId] = pairs[rng.below(pairs.size())];
  InsideModel inN{ModelRef::countable(nId)};

  PCondition p0 = buildP(b.u, StationaryRef::unionSet(), rng, 2, inN);
  PCondition p1 = adjoinModel(b.u, p0, nId);
  PCondition p2 = strengthenPInside(b.u, p1, rng, 2, {});
  PCondition p = makeDNDQ(b.u, p2, nId, qId);

  PCondition q0 = restrictToCountable(b.u, p, nId);
  PCondition q1 = strengthenPInside(b.u, q0, rng, 3, inN);
  PCondition q = makeDQ(b.u, q1, qId);

  b.picks["N"] = nId;
  b.picks["Q"] = qId;
  b.pconds["p"] = p;
  b.pconds["q"] = q;
  return b;
}

/// Product amalgamation scenario over a model of either kind.
Bundle genAmalgProd(SplitMix64& rng, const GenParams& prm, bool forceCountable,
                    bool constrainIndices) {
  GenParams tuned = prm;
  if (!forceCountable) tuned.maxUncountables = std::max<uint32_t>(tuned.maxUncountables, 1);
  tuned.minUncountables = 1;
  Bundle b;
  b.u = trialUniverse(rng, tuned);

  bool useCountable = forceCountable || rng.chance(1, 2) || simpleUncountables(b.u).empty();
  QCondition qp;
  ModelRef m;
  if (useCountable) {
    auto nId = pickSimpleCountable(b.u, rng);
    if (!nId) return skipBundle();
    m = ModelRef::countable(*nId);
    InsideModel inN{m};
    QCondition q0 = buildQ(b.u, rng, 2, inN);
    QCondition q1 = qAdjoinModel(b.u, q0, *nId);
    QCondition q2 = strengthenQInside(b.u, q1, rng, 2, {});
    qp = makeDNQ(b.u, q2, *nId);
  } else {
    auto pId = pickSimpleUncountable(b.u, rng);
    if (!pId) return skipBundle();
    m = ModelRef::uncountable(*pId);
    QCondition q0 = buildQ(b.u, rng, 3);
    qp = makeDPQ(b.u, q0, *pId);
  }
  QCondition base = restrictQ(b.u, qp, m);
  std::optional<OrdVec> allowed;
  if (constrainIndices) allowed = qp.indexDomain();
  QCondition w = strengthenQIndices(b.u, base, rng, 3, InsideModel{m}, allowed);

  b.nums["mCountable"] = m.isCountable ? 1 : 0;
  b.picks["m"] = m.id;
  b.qconds["q"] = qp;
  b.qconds["w"] = w;
  return b;
}

/// Product commuting scenario: N simple countable, P simple uncountable with
/// cut inside N and outside every indexed stationary set.
Bundle genCommute126(SplitMix64& rng, const GenParams& prm) {
  GenParams tuned = prm;
  tuned.maxUncountables = std::max<uint32_t>(tuned.maxUncountables, 1);
  tuned.minUncountables = 1;
  tuned.lowCutPct = 95;
  Bundle b;
  b.u = trialUniverse(rng, tuned);
  std::vector<std::pair<ModelId, ModelId>> pairs;
  for (const auto& nId : simpleCountables(b.u)) {
    const auto& n = b.u.countable(nId);
    for (const auto& pId : simpleUncountables(b.u)) {
      const auto& p = b.u.uncountable(pId);
      bool avoidsS = true;
      for (uint32_t i : p.indexSet)
        avoidsS &= !ords::contains(b.u.stationary(i), p.cut);
      if (avoidsS && n.trace.contains(p.cut)) pairs.emplace_back(nId, pId);
    }
  }
  if (pairs.empty()) return skipBundle();
  auto [nId, pId] = pairs[rng.below(pairs.size())];
  InsideModel inN{ModelRef::countable(nId)};

  QCondition q0 = buildQ(b.u, rng, 2, inN);
  QCondition q1 = qAdjoinModel(b.u, q0, nId);
  QCondition q2 = strengthenQInside(b.u, q1, rng, 2, {});
  QCondition p = qMakeDNDP(b.u, q2, nId, pId);

  QCondition r0 = restrictQ(b.u, p, ModelRef::countable(nId));
  QCondition r1 = strengthenQIndices(b.u, r0, rng, 2, inN, p.indexDomain());
  QCondition q = makeDPQ(b.u, r1, pId);

  b.picks["N"] = nId;
  b.picks["P"] = pId;
  b.qconds["p"] = p;
  b.qconds["q"] = q;
  return b;
}

/// Additivity scenario shared by r*/s* and union-adequacy properties.
Bundle genAdditivity(SplitMix64& rng, const GenParams& prm) {
  GenParams tuned = prm;
  tuned.maxUncountables = std::max<uint32_t>(tuned.maxUncountables, 1);
  tuned.minUncountables = 1;
  Bundle b;
  b.u = trialUniverse(rng, tuned);
  bool countableShape = rng.chance(1, 2);
  auto all = sortedCountables(b.u);

  if (!countableShape) {
    auto pId = pickSimpleUncountable(b.u, rng);
    if (!pId) countableShape = true;
    else {
      const auto& p = b.u.uncountable(*pId);
      std::vector<ModelId> a0 = greedyAdequate(b.u, all, {}, 3);
      std::set<ModelId> a = asSet(a0);
      for (const auto& id : a0) {
        if (auto* w = interU(b.u, b.u.countable(id), p)) a.insert(w->id);
        else return skipBundle();
      }
      std::vector<ModelId> inP, aInP;
      for (const auto& id : all)
        if (p.modelFamily.count(id)) inP.push_back(id);
      for (const auto& id : a)
        if (p.modelFamily.count(id)) aInP.push_back(id);
      std::vector<ModelId> bSet = greedyAdequate(b.u, inP, aInP, aInP.size() + 2);
      b.nums["countable"] = 0;
      b.picks["m"] = *pId;
      b.idsets["A"] = {a.begin(), a.end()};
      b.idsets["B"] = bSet;
      return b;
    }
  }

  auto nId = pickSimpleCountable(b.u, rng);
  if (!nId) return skipBundle();
  const auto& n = b.u.countable(*nId);
  std::vector<ModelId> a0 = greedyAdequate(b.u, all, {*nId}, 3);
  std::set<ModelId> a = closureUnderCountable(b.u, asSet(a0), *nId);
  std::vector<ModelId> inN, aInN;
  for (const auto& id : all)
    if (n.modelFamily.count(id)) inN.push_back(id);
  for (const auto& id : a)
    if (n.modelFamily.count(id)) aInN.push_back(id);
  std::vector<ModelId> bSet = greedyAdequate(b.u, inN, aInN, aInN.size() + 2);
  b.nums["countable"] = 1;
  b.picks["m"] = *nId;
  b.idsets["A"] = {a.begin(), a.end()};
  b.idsets["B"] = bSet;
  return b;
}

// ---------------------------------------------------------------------------
// Evaluation helpers.
// ---------------------------------------------------------------------------

struct AdditivityEnv {
  const Universe& u;
  std::set<ModelId> a, b, all;
  bool countable = true;
  ModelId m;
  bool premise = false;
};

std::optional<AdditivityEnv> additivityPremise(const Bundle& bd) {
  if (skipped(bd) || !bd.idsets.count("A") || !bd.idsets.count("B")) return std::nullopt;
  AdditivityEnv env{bd.u, asSet(bd.idsets.at("A")), asSet(bd.idsets.at("B")), {}, true, "", false};
  env.countable = bd.nums.at("countable") == 1;
  env.m = bd.picks.at("m");
  env.all = env.a;
  env.all.insert(env.b.begin(), env.b.end());
  for (const auto& id : env.all)
    if (!bd.u.hasCountable(id)) return std::nullopt;
  if (!isAdequate(bd.u, env.a) || !isAdequate(bd.u, env.b)) return std::nullopt;

  if (env.countable) {
    if (!bd.u.hasCountable(env.m)) return std::nullopt;
    const auto& n = bd.u.countable(env.m);
    if (!n.simple || !env.a.count(env.m)) return std::nullopt;
    for (const auto& id : env.a) {
      const auto& mm = bd.u.countable(id);
      if (cmp(bd.u, mm, n) != ModelRel::Less) continue;
      auto* w = interC(bd.u, mm, n);
      if (!w || !env.a.count(w->id)) return std::nullopt;
    }
    for (const auto& id : env.a)
      if (n.modelFamily.count(id) && !env.b.count(id)) return std::nullopt;
    for (const auto& id : env.b)
      if (!n.modelFamily.count(id)) return std::nullopt;
  } else {
    if (!bd.u.hasUncountable(env.m)) return std::nullopt;
    const auto& p = bd.u.uncountable(env.m);
    if (!p.simple) return std::nullopt;
    for (const auto& id : env.a) {
      auto* w = interU(bd.u, bd.u.countable(id), p);
      if (!w || !env.a.count(w->id)) return std::nullopt;
    }
    for (const auto& id : env.a)
      if (p.modelFamily.count(id) && !env.b.count(id)) return std::nullopt;
    for (const auto& id : env.b)
      if (!p.modelFamily.count(id)) return std::nullopt;
  }
  env.premise = true;
  return env;
}

struct AmalgNEnv {
  ModelId n;
  PCondition r, w, out;
};

/// Recompute the countable-amalgam premises; null when any fails.
std::optional<AmalgNEnv> amalgNPremise(const Bundle& b, bool evalOut = true,
                                       Counters* counters = nullptr) {
  if (skipped(b) || !b.picks.count("N") || !b.pconds.count("r") || !b.pconds.count("w"))
    return std::nullopt;
  AmalgNEnv env{b.picks.at("N"), b.pconds.at("r"), b.pconds.at("w"), {}};
  try {
    if (!b.u.countable(env.n).simple) return std::nullopt;
    if (!validateP(b.u, env.r).empty() || !validateP(b.u, env.w).empty()) return std::nullopt;
    if (!inDN(b.u, env.r, env.n)) return std::nullopt;
    if (!conditionInCountable(b.u, env.w, env.n)) return std::nullopt;
    if (!leqP(b.u, env.w, restrictToCountable(b.u, env.r, env.n))) return std::nullopt;
    if (evalOut) env.out = amalgCountable(b.u, env.w, env.r, env.n, counters);
  } catch (const Error&) {
    return std::nullopt;
  }
  return env;
}

struct AmalgQEnv {
  ModelId q;
  PCondition cond, w, out;
};

std::optional<AmalgQEnv> amalgQPremise(const Bundle& b, bool evalOut = true,
                                       Counters* counters = nullptr) {
  if (skipped(b) || !b.picks.count("Q") || !b.pconds.count("q") || !b.pconds.count("w"))
    return std::nullopt;
  AmalgQEnv env{b.picks.at("Q"), b.pconds.at("q"), b.pconds.at("w"), {}};
  try {
    if (!b.u.uncountable(env.q).simple) return std::nullopt;
    if (!validateP(b.u, env.cond).empty() || !validateP(b.u, env.w).empty())
      return std::nullopt;
    if (!inDQ(b.u, env.cond, env.q)) return std::nullopt;
    if (!conditionInUncountable(b.u, env.w, env.q)) return std::nullopt;
    if (!leqP(b.u, env.w, restrictToUncountable(b.u, env.cond, env.q))) return std::nullopt;
    if (evalOut) env.out = amalgUncountable(b.u, env.w, env.cond, env.q, counters);
  } catch (const Error&) {
    return std::nullopt;
  }
  return env;
}

struct Commute86Env {
  ModelId n, q;
  PCondition p, qc;
};

std::optional<Commute86Env> commute86Premise(const Bundle& b) {
  if (skipped(b) || !b.picks.count("N") || !b.picks.count("Q")) return std::nullopt;
  Commute86Env env{b.picks.at("N"), b.picks.at("Q"), b.pconds.at("p"), b.pconds.at("q")};
  try {
    const auto& n = b.u.countable(env.n);
    const auto& q = b.u.uncountable(env.q);
    if (!n.simple || !q.simple) return std::nullopt;
    if (!n.trace.contains(q.cut)) return std::nullopt;
    if (ords::contains(b.u.unionStationary(), q.cut)) return std::nullopt;
    if (!validateP(b.u, env.p).empty() || !validateP(b.u, env.qc).empty())
      return std::nullopt;
    if (!inDN(b.u, env.p, env.n) || !inDQ(b.u, env.p, env.q)) return std::nullopt;
    if (!conditionInCountable(b.u, env.qc, env.n) || !inDQ(b.u, env.qc, env.q))
      return std::nullopt;
    if (!leqP(b.u, env.qc, restrictToCountable(b.u, env.p, env.n))) return std::nullopt;
  } catch (const Error&) {
    return std::nullopt;
  }
  return env;
}

struct AmalgProdEnv {
  ModelRef m;
  QCondition q, w;
  OplusQResult out;
};

std::optional<AmalgProdEnv> amalgProdPremise(const Bundle& b, bool evalOut = true) {
  if (skipped(b) || !b.picks.count("m") || !b.qconds.count("q") || !b.qconds.count("w"))
    return std::nullopt;
  AmalgProdEnv env;
  env.m = b.nums.at("mCountable") == 1 ? ModelRef::countable(b.picks.at("m"))
                                       : ModelRef::uncountable(b.picks.at("m"));
  env.q = b.qconds.at("q");
  env.w = b.qconds.at("w");
  try {
    bool simple = env.m.isCountable ? b.u.countable(env.m.id).simple
                                    : b.u.uncountable(env.m.id).simple;
    if (!simple) return std::nullopt;
    if (!validateQ(b.u, env.q).empty() || !validateQ(b.u, env.w).empty())
      return std::nullopt;
    if (!inDClassQ(b.u, env.q, env.m)) return std::nullopt;
    if (!qconditionInModel(b.u, env.w, env.m)) return std::nullopt;
    if (!leqQ(b.u, env.w, restrictQ(b.u, env.q, env.m))) return std::nullopt;
    if (evalOut) env.out = oplusQ(b.u, env.w, env.q, env.m);
  } catch (const Error&) {
    return std::nullopt;
  }
  return env;
}

struct Commute126Env {
  ModelId n, p;
  QCondition pc, qc;
};

std::optional<Commute126Env> commute126Premise(const Bundle& b) {
  if (skipped(b) || !b.picks.count("N") || !b.picks.count("P")) return std::nullopt;
  Commute126Env env{b.picks.at("N"), b.picks.at("P"), b.qconds.at("p"), b.qconds.at("q")};
  try {
    const auto& n = b.u.countable(env.n);
    const auto& p = b.u.uncountable(env.p);
    if (!n.simple || !p.simple || !n.trace.contains(p.cut)) return std::nullopt;
    for (uint32_t i : p.indexSet)
      if (ords::contains(b.u.stationary(i), p.cut)) return std::nullopt;
    if (!validateQ(b.u, env.pc).empty() || !validateQ(b.u, env.qc).empty())
      return std::nullopt;
    if (!inDNQ(b.u, env.pc, env.n) || !inDPQ(b.u, env.pc, env.p)) return std::nullopt;
    if (!qconditionInModel(b.u, env.qc, ModelRef::countable(env.n))) return std::nullopt;
    if (!inDPQ(b.u, env.qc, env.p)) return std::nullopt;
    if (!leqQ(b.u, env.qc, restrictQ(b.u, env.pc, ModelRef::countable(env.n))))
      return std::nullopt;
    if (!ords::subset(env.qc.indexDomain(), env.pc.indexDomain())) return std::nullopt;
  } catch (const Error&) {
    return std::nullopt;
  }
  return env;
}

EvalResult conclude(bool ok, const std::string& why) {
  return ok ? EvalResult::ok() : EvalResult::bad(why);
}

// ---------------------------------------------------------------------------
// The catalog.
// ---------------------------------------------------------------------------

std::vector<PropertyDef> buildCatalog() {
  std::vector<PropertyDef> cat;
  auto add = [&cat](std::string id, std::string statement, uint32_t floorPct,
                    std::function<Bundle(uint64_t, const GenParams&)> g,
                    std::function<EvalResult(const Bundle&)> e) {
    cat.push_back(PropertyDef{std::move(id), std::move(statement), floorPct, std::move(g),
                              std::move(e)});
  };

  auto genU = gen(genUniverse);

  add("P-2.15", "below the comparison point, a lower model agrees with the pair intersection",
      60, genU, [](const Bundle& b) {
        if (skipped(b)) return EvalResult::miss();
        bool premise = false;
        for (const auto& [mi, m] : b.u.countables) {
          for (const auto& [ni, n] : b.u.countables) {
            if (!lessOrEquiv(cmp(b.u, m, n))) continue;
            premise = true;
            Ord beta0 = beta(b.u, m, n);
            if (m.trace.restrictBelow(beta0) != m.trace.intersect(n.trace))
              return EvalResult::bad(mi + "," + ni);
          }
        }
        return premise ? EvalResult::ok() : EvalResult::miss();
      });

  add("P-2.16", "an adequate set of members of N stays adequate with N added", 40, genU,
      [](const Bundle& b) {
        if (skipped(b)) return EvalResult::miss();
        bool premise = false;
        for (const auto& [ni, n] : b.u.countables) {
          std::vector<ModelId> fam(n.modelFamily.begin(), n.modelFamily.end());
          auto a = greedyAdequate(b.u, fam, {}, 4);
          if (a.empty()) continue;
          premise = true;
          auto withN = asSet(a);
          withN.insert(ni);
          if (!isAdequate(b.u, withN)) return EvalResult::bad(ni);
        }
        return premise ? EvalResult::ok() : EvalResult::miss();
      });

  add("P-2.17", "comparable pairs order exactly as their deltas", 60, genU,
      [](const Bundle& b) {
        if (skipped(b)) return EvalResult::miss();
        bool premise = false;
        for (const auto& [mi, m] : b.u.countables) {
          for (const auto& [ni, n] : b.u.countables) {
            ModelRel r = cmp(b.u, m, n);
            if (r == ModelRel::Incomparable) continue;
            premise = true;
            bool ok = (r == ModelRel::Less && m.delta() < n.delta()) ||
                      (r == ModelRel::Equiv && m.delta() == n.delta()) ||
                      (r == ModelRel::Greater && m.delta() > n.delta());
            if (!ok) return EvalResult::bad(mi + "," + ni);
            ModelRel rev = cmp(b.u, n, m);
            bool dual = (r == ModelRel::Less && rev == ModelRel::Greater) ||
                        (r == ModelRel::Greater && rev == ModelRel::Less) ||
                        (r == ModelRel::Equiv && rev == ModelRel::Equiv);
            if (!dual) return EvalResult::bad("asymmetry at " + mi + "," + ni);
          }
        }
        return premise ? EvalResult::ok() : EvalResult::miss();
      });

  add("P-2.18", "comparison is transitive and the equivalence respects it", 40, genU,
      [](const Bundle& b) {
        if (skipped(b)) return EvalResult::miss();
        bool premise = false;
        auto ids = sortedCountables(b.u);
        for (const auto& ki : ids)
          for (const auto& mi : ids)
            for (const auto& ni : ids) {
              const auto &k = b.u.countable(ki), &m = b.u.countable(mi), &n = b.u.countable(ni);
              ModelRel km = cmp(b.u, k, m), mn = cmp(b.u, m, n), kn = cmp(b.u, k, n);
              if (km == ModelRel::Incomparable || mn == ModelRel::Incomparable ||
                  kn == ModelRel::Incomparable)
                continue;
              premise = true;
              if (km == ModelRel::Less && mn == ModelRel::Less && kn != ModelRel::Less)
                return EvalResult::bad("<-transitivity " + ki + mi + ni);
              if (km == ModelRel::Equiv && mn == ModelRel::Equiv && kn != ModelRel::Equiv)
                return EvalResult::bad("~-transitivity " + ki + mi + ni);
              if (km == ModelRel::Less && mn == ModelRel::Equiv && kn != ModelRel::Less)
                return EvalResult::bad("respect-right " + ki + mi + ni);
              if (km == ModelRel::Equiv && mn == ModelRel::Less && kn != ModelRel::Less)
                return EvalResult::bad("respect-left " + ki + mi + ni);
            }
        return premise ? EvalResult::ok() : EvalResult::miss();
      });

  add("P-2.24", "closure under a countable model is adequate and closed", 40, genU,
      [](const Bundle& b) {
        if (skipped(b)) return EvalResult::miss();
        bool premise = false;
        auto ids = sortedCountables(b.u);
        for (const auto& ni : ids) {
          auto a = greedyAdequate(b.u, ids, {ni}, 3);
          std::set<ModelId> closed;
          try {
            closed = closureUnderCountable(b.u, asSet(a), ni);
          } catch (const Error& e) {
            return EvalResult::bad(std::string("closure failed: ") + e.what());
          }
          premise = true;
          if (!isAdequate(b.u, closed)) return EvalResult::bad(ni);
          for (const auto& mi : closed) {
            const auto& m = b.u.countable(mi);
            if (cmp(b.u, m, b.u.countable(ni)) != ModelRel::Less) continue;
            auto* w = interC(b.u, m, b.u.countable(ni));
            if (!w || !closed.count(w->id)) return EvalResult::bad("not closed at " + mi);
          }
        }
        return premise ? EvalResult::ok() : EvalResult::miss();
      });

  add("P-2.25", "amalgamated side-condition sets over a countable model are adequate", 20,
      gen(genAdditivity), [](const Bundle& b) {
        auto env = additivityPremise(b);
        if (!env || !env->countable) return EvalResult::miss();
        return conclude(isAdequate(env->u, env->all), "union not adequate");
      });

  add("P-2.26", "a model is equivalent to its intersection with a larger one", 60, genU,
      [](const Bundle& b) {
        if (skipped(b)) return EvalResult::miss();
        bool premise = false;
        for (const auto& [mi, m] : b.u.countables) {
          for (const auto& [ni, n] : b.u.countables) {
            if (cmp(b.u, m, n) != ModelRel::Less) continue;
            auto* w = interC(b.u, m, n);
            if (!w) continue;
            premise = true;
            if (cmp(b.u, m, *w) != ModelRel::Equiv) return EvalResult::bad(mi + "," + ni);
          }
        }
        return premise ? EvalResult::ok() : EvalResult::miss();
      });

  add("P-2.27", "closure under an uncountable model is adequate and closed", 25, genU,
      [](const Bundle& b) {
        if (skipped(b)) return EvalResult::miss();
        bool premise = false;
        auto ids = sortedCountables(b.u);
        for (const auto& [pi, p] : b.u.uncountables) {
          auto a = greedyAdequate(b.u, ids, {}, 3);
          std::set<ModelId> closed;
          try {
            closed = closureUnderUncountable(b.u, asSet(a), pi);
          } catch (const Error& e) {
            return EvalResult::bad(std::string("closure failed: ") + e.what());
          }
          premise = true;
          if (!isAdequate(b.u, closed)) return EvalResult::bad(pi);
          for (const auto& mi : closed) {
            auto* w = interU(b.u, b.u.countable(mi), p);
            if (!w || !closed.count(w->id)) return EvalResult::bad("not closed at " + mi);
          }
        }
        return premise ? EvalResult::ok() : EvalResult::miss();
      });

  add("P-2.28", "amalgamated side-condition sets over an uncountable model are adequate", 15,
      gen(genAdditivity), [](const Bundle& b) {
        auto env = additivityPremise(b);
        if (!env || env->countable) return EvalResult::miss();
        return conclude(isAdequate(env->u, env->all), "union not adequate");
      });

  add("P-2.29", "a model is equivalent to its intersection with an uncountable model", 25,
      genU, [](const Bundle& b) {
        if (skipped(b)) return EvalResult::miss();
        bool premise = false;
        for (const auto& [mi, m] : b.u.countables) {
          for (const auto& [pi, p] : b.u.uncountables) {
            auto* w = interU(b.u, m, p);
            if (!w) continue;
            premise = true;
            if (cmp(b.u, m, *w) != ModelRel::Equiv) return EvalResult::bad(mi + "," + pi);
          }
        }
        return premise ? EvalResult::ok() : EvalResult::miss();
      });

  add("P-2.30", "intersections of simple models are simple", 10, genU, [](const Bundle& b) {
    if (skipped(b)) return EvalResult::miss();
    bool premise = false;
    for (const auto& [ni, n] : b.u.countables) {
      if (!n.simple) continue;
      for (const auto& [pi, p] : b.u.uncountables) {
        if (!p.simple || !n.trace.contains(p.cut)) continue;
        auto* np = interU(b.u, n, p);
        if (!np) continue;
        premise = true;
        for (const auto& [mi, m] : b.u.countables) {
          if (cmp(b.u, m, *np) != ModelRel::Less) continue;
          auto* w = interC(b.u, m, *np);
          if (!w || !np->modelFamily.count(w->id))
            return EvalResult::bad(ni + " ∩ " + pi + " not simple at " + mi);
        }
      }
    }
    return premise ? EvalResult::ok() : EvalResult::miss();
  });

  add("P-2.32", "hull order within chain families is sup order", 40, genU,
      [](const Bundle& b) {
        if (skipped(b)) return EvalResult::miss();
        bool premise = false;
        auto ids = sortedCountables(b.u);
        for (uint32_t lam : b.u.config.lambdaSet) {
          auto a = greedyAdequate(b.u, ids, {}, 4);
          std::vector<TraceSet> family;
          for (const auto& mi : a) {
            const auto& m = b.u.countable(mi);
            if (m.trace.contains(lam)) family.push_back(m.trace.restrictBelow(Ord::fin(lam)));
          }
          for (size_t i = 0; i < family.size(); ++i)
            for (size_t j = 0; j < family.size(); ++j) {
              if (family[i] == family[j]) continue;
              premise = true;
              bool h;
              try {
                h = hull(b.u, family[i], HullTarget::set(family[j]));
              } catch (const Error&) {
                h = false;
              }
              if (h != (family[i].sup() < family[j].sup()))
                return EvalResult::bad(family[i].str() + " vs " + family[j].str());
              if (family[i].sup() == family[j].sup())
                return EvalResult::bad("sup collision " + family[i].str());
            }
        }
        return premise ? EvalResult::ok() : EvalResult::miss();
      });

  add("P-2.33", "cut traces of an adequate set form a hull chain", 40, genU,
      [](const Bundle& b) {
        if (skipped(b)) return EvalResult::miss();
        bool premise = false;
        auto ids = sortedCountables(b.u);
        for (uint32_t lam : b.u.config.lambdaSet) {
          auto a = greedyAdequate(b.u, ids, {}, 4);
          std::vector<TraceSet> family;
          for (const auto& mi : a) {
            const auto& m = b.u.countable(mi);
            if (m.trace.contains(lam)) family.push_back(m.trace.restrictBelow(Ord::fin(lam)));
          }
          for (size_t i = 0; i < family.size(); ++i) {
            if (!hull(b.u, family[i], HullTarget::cut(Ord::fin(lam))))
              return EvalResult::bad("outside the cut hull");
            for (size_t j = 0; j < family.size(); ++j) {
              if (i == j || family[i] == family[j]) continue;
              premise = true;
              bool ij, ji;
              try {
                ij = hull(b.u, family[i], HullTarget::set(family[j]));
                ji = hull(b.u, family[j], HullTarget::set(family[i]));
              } catch (const Error&) {
                return EvalResult::bad("no representation inside a chain family");
              }
              if (!(ij ^ ji))
                return EvalResult::bad("not a chain: " + family[i].str() + " vs " +
                                       family[j].str());
            }
          }
        }
        return premise ? EvalResult::ok() : EvalResult::miss();
      });

  add("P-3.2", "matching cut traces force equivalence and identify the remainder point", 25,
      genU, [](const Bundle& b) {
        if (skipped(b)) return EvalResult::miss();
        bool premise = false;
        uint32_t w = b.u.config.omega1Cut;
        for (const auto& [mi, m] : b.u.countables) {
          for (const auto& [ni, n] : b.u.countables) {
            if (mi == ni || cmp(b.u, m, n) == ModelRel::Incomparable) continue;
            std::vector<Ord> gammas;
            for (uint32_t gv : n.trace.elems())
              if (gv >= w) gammas.push_back(Ord::fin(gv));
            gammas.push_back(Ord::kappa());
            for (uint32_t alpha : m.trace.elems()) {
              if (alpha < w) continue;
              for (Ord gamma : gammas) {
                if (!gamma.isKappa() && gamma.finite() == alpha) continue;
                if (m.trace.restrictBelow(Ord::fin(alpha)) != n.trace.restrictBelow(gamma))
                  continue;
                premise = true;
                if (cmp(b.u, m, n) != ModelRel::Equiv)
                  return EvalResult::bad("not equivalent: " + mi + "," + ni);
                auto g = minAbove(b.u, m, beta(b.u, m, n));
                if (!g || *g != alpha)
                  return EvalResult::bad("remainder mismatch at " + std::to_string(alpha));
              }
            }
          }
        }
        return premise ? EvalResult::ok() : EvalResult::miss();
      });

  add("P-3.3", "the remainder point survives intersecting with the larger model", 15, genU,
      [](const Bundle& b) {
        if (skipped(b)) return EvalResult::miss();
        bool premise = false;
        for (const auto& [mi, m] : b.u.countables) {
          for (const auto& [ni, n] : b.u.countables) {
            if (cmp(b.u, m, n) != ModelRel::Less) continue;
            auto g = minAbove(b.u, m, beta(b.u, m, n));
            if (!g) continue;
            auto* w = interC(b.u, m, n);
            if (!w) continue;
            premise = true;
            auto g2 = minAbove(b.u, m, beta(b.u, m, *w));
            if (!g2 || *g2 != *g) return EvalResult::bad(mi + "," + ni);
          }
        }
        return premise ? EvalResult::ok() : EvalResult::miss();
      });

  add("P-3.4", "remainder points transfer through intersections below a countable model", 15,
      genU, [](const Bundle& b) {
        if (skipped(b)) return EvalResult::miss();
        bool premise = false;
        for (const auto& [ni, n] : b.u.countables) {
          for (const auto& mi : n.modelFamily) {
            const auto& m = b.u.countable(mi);
            for (const auto& [ki, k] : b.u.countables) {
              if (cmp(b.u, k, m) != ModelRel::Equiv || ki == mi) continue;
              if (cmp(b.u, k, n) == ModelRel::Incomparable) continue;
              auto* kn = interC(b.u, k, n);
              if (!kn) continue;
              premise = true;
              if (cmp(b.u, k, n) != ModelRel::Less)
                return EvalResult::bad("membership without strict order: " + ki + "," + ni);
              if (cmp(b.u, m, *kn) != ModelRel::Equiv)
                return EvalResult::bad(mi + " vs " + kn->id);
              if (auto alpha = minAbove(b.u, m, beta(b.u, k, m))) {
                auto t = minAbove(b.u, m, beta(b.u, m, *kn));
                if (!t || *t != *alpha) return EvalResult::bad("M-side transfer");
              }
              if (auto alpha = minAbove(b.u, k, beta(b.u, k, m))) {
                auto t1 = minAbove(b.u, *kn, beta(b.u, *kn, m));
                auto t2 = minAbove(b.u, k, beta(b.u, k, *kn));
                bool ok = (t1 && *t1 == *alpha) || (t2 && *t2 == *alpha);
                if (!ok) return EvalResult::bad("K-side transfer");
              }
            }
          }
        }
        return premise ? EvalResult::ok() : EvalResult::miss();
      });

  add("P-3.5", "remainder sets add over amalgams below a countable model", 20,
      gen(genAdditivity), [](const Bundle& b) {
        auto env = additivityPremise(b);
        if (!env || !env->countable) return EvalResult::miss();
        OrdVec lhs = rStar(env->u, env->all);
        OrdVec rhs = ords::unite(rStar(env->u, env->a), rStar(env->u, env->b));
        return conclude(lhs == rhs, "r* not additive");
      });

  add("P-3.6", "the first ordinal past an uncountable cut is a remainder point", 10, genU,
      [](const Bundle& b) {
        if (skipped(b)) return EvalResult::miss();
        bool premise = false;
        for (const auto& [mi, m] : b.u.countables) {
          for (const auto& [pi, p] : b.u.uncountables) {
            auto g = minAbove(b.u, m, Ord::fin(p.cut));
            if (!g) continue;
            auto* w = interU(b.u, m, p);
            if (!w) continue;
            premise = true;
            auto g2 = minAbove(b.u, m, beta(b.u, *w, m));
            if (!g2 || *g2 != *g) return EvalResult::bad(mi + "," + pi);
          }
        }
        return premise ? EvalResult::ok() : EvalResult::miss();
      });

  add("P-3.7", "remainder points transfer through intersections below an uncountable model", 15, genU, [](const Bundle& b) {
        if (skipped(b)) return EvalResult::miss();
        bool premise = false;
        for (const auto& [pi, p] : b.u.uncountables) {
          for (const auto& mi : p.modelFamily) {
            const auto& m = b.u.countable(mi);
            for (const auto& [ki, k] : b.u.countables) {
              if (ki == mi || cmp(b.u, k, m) != ModelRel::Equiv) continue;
              auto* kp = interU(b.u, k, p);
              if (!kp) continue;
              premise = true;
              if (cmp(b.u, *kp, m) != ModelRel::Equiv)
                return EvalResult::bad(kp->id + " vs " + mi);
              if (auto alpha = minAbove(b.u, m, beta(b.u, k, m))) {
                auto t = minAbove(b.u, m, beta(b.u, m, *kp));
                if (!t || *t != *alpha) return EvalResult::bad("M-side transfer");
              }
              if (auto alpha = minAbove(b.u, k, beta(b.u, k, m))) {
                auto t1 = minAbove(b.u, *kp, beta(b.u, *kp, m));
                auto t2 = minAbove(b.u, k, beta(b.u, *kp, k));
                bool ok = (t1 && *t1 == *alpha) || (t2 && *t2 == *alpha);
                if (!ok) return EvalResult::bad("K-side transfer");
              }
            }
          }
        }
        return premise ? EvalResult::ok() : EvalResult::miss();
      });

  add("P-3.8", "remainder sets add over amalgams below an uncountable model", 20,
      gen(genAdditivity), [](const Bundle& b) {
        auto env = additivityPremise(b);
        if (!env || env->countable) return EvalResult::miss();
        OrdVec lhs = rStar(env->u, env->all);
        OrdVec rhs = ords::unite(rStar(env->u, env->a), rStar(env->u, env->b));
        return conclude(lhs == rhs, "r* not additive");
      });

  // --- single forcing: structure of conditions -----------------------------

  add("P-4.3", "chain members sit inside their keys and below uncountable cuts", 15,
      gen(genCond), [](const Bundle& b) {
        if (skipped(b) || !b.pconds.count("r")) return EvalResult::miss();
        const PCondition& r = b.pconds.at("r");
        if (!validateP(b.u, r).empty()) return EvalResult::miss();
        bool premise = false;
        for (const auto& [x, chain] : r.f) {
          for (const TraceSet& k : chain) {
            premise = true;
            bool inside = x.isOrd() ? k.sup() < x.alpha() : k.subsetOf(x.set());
            if (!inside) return EvalResult::bad("member outside key " + x.str());
          }
          if (!x.isOrd()) {
            for (const auto& [ni, n] : b.u.countables) {
              if (!memSet(b.u, x.set(), n)) continue;
              for (uint32_t alpha : stationarySet(b.u, r.s)) {
                if (x.set().sup() >= alpha || !n.trace.contains(alpha)) continue;
                premise = true;
                bool h;
                try {
                  h = hull(b.u, x.set(),
                           HullTarget::set(n.trace.restrictBelow(Ord::fin(alpha))));
                } catch (const Error&) {
                  h = false;
                }
                if (!h) return EvalResult::bad("element escapes the cut hull of " + ni);
              }
            }
            for (const auto& [pi, p] : b.u.uncountables) {
              if (x.set().sup() < p.cut && !elemInU(x, p))
                return EvalResult::bad("cut membership mismatch");
            }
          }
        }
        return premise ? EvalResult::ok() : EvalResult::miss();
      });

  add("P-4.4", "chain order coincides with sup order", 5, gen(genCond),
      [](const Bundle& b) {
        if (skipped(b) || !b.pconds.count("r")) return EvalResult::miss();
        const PCondition& r = b.pconds.at("r");
        if (!validateP(b.u, r).empty()) return EvalResult::miss();
        bool premise = false;
        for (const auto& [x, chain] : r.f) {
          for (size_t i = 0; i < chain.size(); ++i)
            for (size_t j = 0; j < chain.size(); ++j) {
              if (i == j) continue;
              premise = true;
              bool h;
              try {
                h = hull(b.u, chain[i], HullTarget::set(chain[j]));
              } catch (const Error&) {
                h = false;
              }
              if (h != (chain[i].sup() < chain[j].sup()))
                return EvalResult::bad("hull/sup mismatch under " + x.str());
            }
        }
        return premise ? EvalResult::ok() : EvalResult::miss();
      });

  auto freshPick = [](const Universe& u, const PCondition& r, SplitMix64& rng,
                      size_t want) -> OrdVec {
    OrdVec avail = ords::diff(stationarySet(u, r.s), r.domOrds());
    OrdVec covered;
    for (uint32_t v : avail) {
      for (const auto& mId : r.a)
        if (u.countable(mId).trace.contains(v)) {
          covered.push_back(v);
          break;
        }
    }
    OrdVec out;
    OrdVec* pool = covered.size() >= want ? &covered : &avail;
    while (out.size() < want && !pool->empty()) {
      uint32_t v = (*pool)[rng.below(pool->size())];
      out.push_back(v);
      *pool = ords::diff(*pool, OrdVec{v});
    }
    return ords::normalized(out);
  };

  add("P-4.5", "fresh cut traces avoid the existing domain", 2,
      gen([freshPick](SplitMix64& rng, const GenParams& prm) {
        Bundle b;
        b.u = trialUniverse(rng, prm);
        b.pconds["r"] = buildP(b.u, StationaryRef::unionSet(), rng, 3);
        b.ordsets["fresh"] = freshPick(b.u, b.pconds.at("r"), rng, 1);
        return b;
      }),
      [](const Bundle& b) {
        if (skipped(b) || !b.ordsets.count("fresh") || b.ordsets.at("fresh").empty())
          return EvalResult::miss();
        const PCondition& r = b.pconds.at("r");
        if (!validateP(b.u, r).empty()) return EvalResult::miss();
        uint32_t alpha = b.ordsets.at("fresh")[0];
        if (ords::contains(r.domOrds(), alpha)) return EvalResult::miss();
        bool premise = false;
        for (const auto& mi : r.a) {
          const auto& m = b.u.countable(mi);
          if (!m.trace.contains(alpha)) continue;
          premise = true;
          if (r.hasSet(m.trace.restrictBelow(Ord::fin(alpha))))
            return EvalResult::bad(mi + " ∩ " + std::to_string(alpha) + " already present");
        }
        return premise ? EvalResult::ok() : EvalResult::miss();
      });

  add("P-4.6", "cut traces at distinct fresh ordinals are pairwise disjoint from each other", 1,
      gen([freshPick](SplitMix64& rng, const GenParams& prm) {
        Bundle b;
        b.u = trialUniverse(rng, prm);
        b.pconds["r"] = buildP(b.u, StationaryRef::unionSet(), rng, 3);
        b.ordsets["fresh"] = freshPick(b.u, b.pconds.at("r"), rng, 2);
        return b;
      }),
      [](const Bundle& b) {
        if (skipped(b) || !b.ordsets.count("fresh") || b.ordsets.at("fresh").size() < 2)
          return EvalResult::miss();
        const PCondition& r = b.pconds.at("r");
        if (!validateP(b.u, r).empty()) return EvalResult::miss();
        uint32_t alpha = b.ordsets.at("fresh")[0], beta0 = b.ordsets.at("fresh")[1];
        OrdVec dom = r.domOrds();
        if (ords::contains(dom, alpha) || ords::contains(dom, beta0))
          return EvalResult::miss();
        bool premise = false;
        for (const auto& mi : r.a) {
          const auto& m = b.u.countable(mi);
          if (!m.trace.contains(alpha)) continue;
          TraceSet ta = m.trace.restrictBelow(Ord::fin(alpha));
          if (r.hasSet(ta)) return EvalResult::bad("collides with the domain");
          for (const auto& ni : r.a) {
            const auto& n = b.u.countable(ni);
            if (!n.trace.contains(beta0)) continue;
            premise = true;
            if (ta == n.trace.restrictBelow(Ord::fin(beta0)))
              return EvalResult::bad(mi + " ∩ " + std::to_string(alpha) + " = " + ni + " ∩ " +
                                     std::to_string(beta0));
          }
        }
        return premise ? EvalResult::ok() : EvalResult::miss();
      });

  add("P-4.8", "ordinal extension yields a stronger condition", 15,
      gen([freshPick](SplitMix64& rng, const GenParams& prm) {
        Bundle b = genCond(rng, prm);
        if (skipped(b)) return b;
        b.ordsets["x"] = freshPick(b.u, b.pconds.at("r"), rng, 1 + rng.below(2));
        return b;
      }),
      [](const Bundle& b) {
        if (skipped(b) || !b.ordsets.count("x")) return EvalResult::miss();
        const PCondition& r = b.pconds.at("r");
        const OrdVec& x = b.ordsets.at("x");
        if (x.empty() || !validateP(b.u, r).empty()) return EvalResult::miss();
        if (!ords::intersect(x, r.domOrds()).empty()) return EvalResult::miss();
        PCondition q;
        try {
          q = extendOrdinals(b.u, r, x);
        } catch (const Error& e) {
          return EvalResult::bad(e.what());
        }
        if (!validateP(b.u, q).empty()) return EvalResult::bad("extension invalid");
        if (!leqP(b.u, q, r)) return EvalResult::bad("extension not below");
        if (!ords::subset(x, q.domOrds())) return EvalResult::bad("ordinals missing");
        return EvalResult::ok();
      });

  add("P-4.9", "g saturation is a stronger fixed point with unchanged chains", 60,
      gen(genCond), [](const Bundle& b) {
        if (skipped(b) || !b.pconds.count("r")) return EvalResult::miss();
        const PCondition& r = b.pconds.at("r");
        if (!validateP(b.u, r).empty()) return EvalResult::miss();
        PCondition q = saturateG(b.u, r);
        if (!validateP(b.u, q).empty()) return EvalResult::bad("saturation invalid");
        if (!leqP(b.u, q, r)) return EvalResult::bad("not below the input");
        if (q.f != r.f || q.a != r.a) return EvalResult::bad("chains or models changed");
        for (const auto& [y, chain] : q.f)
          for (const TraceSet& x : chain) {
            auto xt = q.f.find(DomainElement::setElem(x));
            if (xt == q.f.end()) continue;
            for (const TraceSet& k : xt->second)
              if (!ords::subset(q.gAt(k, DomainElement::setElem(x)), q.gAt(k, y)))
                return EvalResult::bad("coherence not strengthened");
          }
        if (!(saturateG(b.u, q) == q)) return EvalResult::bad("not idempotent");
        return EvalResult::ok();
      });

  // --- single forcing: uncountable side ------------------------------------

  add("P-6.5", "restriction to an uncountable model is a weaker condition inside it", 30,
      gen(genAmalgQ), [](const Bundle& b) {
        auto env = amalgQPremise(b, false);
        if (!env) return EvalResult::miss();
        PCondition res = restrictToUncountable(b.u, env->cond, env->q);
        if (!validateP(b.u, res).empty()) return EvalResult::bad("restriction invalid");
        if (!conditionInUncountable(b.u, res, env->q))
          return EvalResult::bad("restriction escapes the model");
        if (!leqP(b.u, env->cond, res)) return EvalResult::bad("input not below");
        return EvalResult::ok();
      });

  add("P-6.6", "restriction to an uncountable model is monotone", 30,
      gen([](SplitMix64& rng, const GenParams& prm) {
        GenParams tuned = prm;
        tuned.maxUncountables = std::max<uint32_t>(tuned.maxUncountables, 1);
  tuned.minUncountables = 1;
        Bundle b;
        b.u = trialUniverse(rng, tuned);
        auto qId = pickSimpleUncountable(b.u, rng);
        if (!qId) return skipBundle();
        PCondition p = makeDQ(b.u, buildP(b.u, StationaryRef::unionSet(), rng, 4), *qId);
        PCondition q = makeDQ(b.u, strengthenPInside(b.u, p, rng, 3, {}), *qId);
        b.picks["Q"] = *qId;
        b.pconds["p"] = p;
        b.pconds["q"] = q;
        return b;
      }),
      [](const Bundle& b) {
        if (skipped(b) || !b.picks.count("Q")) return EvalResult::miss();
        const ModelId& qId = b.picks.at("Q");
        const PCondition &p = b.pconds.at("p"), &q = b.pconds.at("q");
        try {
          if (!b.u.uncountable(qId).simple) return EvalResult::miss();
          if (!validateP(b.u, p).empty() || !validateP(b.u, q).empty())
            return EvalResult::miss();
          if (!inDQ(b.u, p, qId) || !inDQ(b.u, q, qId) || !leqP(b.u, q, p))
            return EvalResult::miss();
        } catch (const Error&) {
          return EvalResult::miss();
        }
        PCondition pq = restrictToUncountable(b.u, p, qId);
        PCondition qq = restrictToUncountable(b.u, q, qId);
        if (!leqP(b.u, qq, pq)) return EvalResult::bad("restriction not monotone");
        if (!leqP(b.u, q, pq)) return EvalResult::bad("below-restriction clause");
        return EvalResult::ok();
      });

  add("P-6.7", "below the restriction, the inside parts of q are preserved", 30,
      gen(genAmalgQ), [](const Bundle& b) {
        auto env = amalgQPremise(b, false);
        if (!env) return EvalResult::miss();
        const auto& qm = b.u.uncountable(env->q);
        for (const auto& mi : env->cond.a) {
          if (qm.modelFamily.count(mi) && !env->w.a.count(mi))
            return EvalResult::bad("side condition lost");
        }
        for (const auto& [x, chain] : env->cond.f) {
          if (!elemInU(x, qm)) continue;
          auto it = env->w.f.find(x);
          if (it == env->w.f.end()) return EvalResult::bad("domain element lost");
          for (const TraceSet& k : chain)
            if (!chainHas(it->second, k)) return EvalResult::bad("chain member lost");
        }
        for (const auto& [key, val] : env->cond.g) {
          if (!elemInU(key.x, qm)) continue;
          if (!ords::subset(val, env->w.gAt(key.k, key.x)))
            return EvalResult::bad("g value lost");
        }
        return EvalResult::ok();
      });

  add("P-6.9", "the uncountable amalgam extends both chain assignments", 30, gen(genAmalgQ),
      [](const Bundle& b) {
        auto env = amalgQPremise(b);
        if (!env) return EvalResult::miss();
        for (const auto& [x, chain] : env->w.f) {
          if (env->out.chainAt(x) != chain) return EvalResult::bad("w chain changed");
        }
        for (const auto& [x, chain] : env->cond.f) {
          const Chain& oc = env->out.chainAt(x);
          for (const TraceSet& k : chain)
            if (!chainHas(oc, k)) return EvalResult::bad("q chain member lost");
        }
        return EvalResult::ok();
      });

  add("P-6.10", "the uncountable amalgam adds nothing inside the model or inside q", 30,
      gen(genAmalgQ), [](const Bundle& b) {
        auto env = amalgQPremise(b);
        if (!env) return EvalResult::miss();
        const auto& qm = b.u.uncountable(env->q);
        for (const auto& [x, chain] : env->out.f) {
          bool inQ = elemInU(x, qm);
          if (inQ != (env->w.f.count(x) != 0))
            return EvalResult::bad("domain trace inside the model mismatch");
          for (const TraceSet& k : chain) {
            if (env->w.f.count(x) && env->w.hasSet(k) && !chainHas(env->w.chainAt(x), k))
              return EvalResult::bad("new member under a w element");
            if (env->cond.f.count(x) && env->cond.hasSet(k) &&
                !chainHas(env->cond.chainAt(x), k))
              return EvalResult::bad("new member under a q element");
          }
        }
        return EvalResult::ok();
      });

  add("P-6.11", "the uncountable amalgam has coherent hull chains", 30, gen(genAmalgQ),
      [](const Bundle& b) {
        auto env = amalgQPremise(b);
        if (!env) return EvalResult::miss();
        for (const auto& v : validateP(b.u, env->out)) {
          if (v.clause == "C2" || v.clause == "C3")
            return EvalResult::bad(v.clause + " " + v.witness);
        }
        return EvalResult::ok();
      });

  add("P-6.13", "the uncountable amalgam's g values stay in their windows", 30,
      gen(genAmalgQ), [](const Bundle& b) {
        auto env = amalgQPremise(b);
        if (!env) return EvalResult::miss();
        for (const auto& v : validateP(b.u, env->out)) {
          if (v.clause == "C4" || v.clause == "C5")
            return EvalResult::bad(v.clause + " " + v.witness);
        }
        return EvalResult::ok();
      });

  add("P-6.15", "the uncountable amalgam is a condition below both inputs", 30,
      gen(genAmalgQ), [](const Bundle& b) {
        Counters counters;
        auto env = amalgQPremise(b, true, &counters);
        if (!env) return EvalResult::miss();
        if (!validateP(b.u, env->out).empty()) return EvalResult::bad("amalgam invalid");
        if (!leqP(b.u, env->out, env->w)) return EvalResult::bad("not below w");
        if (!leqP(b.u, env->out, env->cond)) return EvalResult::bad("not below q");
        EvalResult res = EvalResult::ok();
        res.counters = std::move(counters);
        return res;
      });

  // --- single forcing: countable side ---------------------------------------

  add("P-7.6", "restriction to a countable model is a weaker condition inside it", 30,
      gen([](SplitMix64& rng, const GenParams& prm) { return genAmalgN(rng, prm, false); }),
      [](const Bundle& b) {
        auto env = amalgNPremise(b, false);
        if (!env) return EvalResult::miss();
        PCondition res = restrictToCountable(b.u, env->r, env->n);
        if (!validateP(b.u, res).empty()) return EvalResult::bad("restriction invalid");
        if (!conditionInCountable(b.u, res, env->n))
          return EvalResult::bad("restriction escapes the model");
        if (!leqP(b.u, env->r, res)) return EvalResult::bad("input not below");
        return EvalResult::ok();
      });

  add("P-7.7", "restricting below a condition of the model lands below it", 40,
      gen([](SplitMix64& rng, const GenParams& prm) {
        Bundle b;
        b.u = trialUniverse(rng, prm);
        auto nId = pickSimpleCountable(b.u, rng);
        if (!nId) return skipBundle();
        InsideModel inN{ModelRef::countable(*nId)};
        PCondition p = buildP(b.u, StationaryRef::unionSet(), rng, 3, inN);
        PCondition r = makeDN(b.u, strengthenPInside(b.u, adjoinModel(b.u, p, *nId), rng, 3, {}),
                              *nId);
        b.picks["N"] = *nId;
        b.pconds["p"] = p;
        b.pconds["r"] = r;
        return b;
      }),
      [](const Bundle& b) {
        if (skipped(b) || !b.picks.count("N")) return EvalResult::miss();
        const ModelId& n = b.picks.at("N");
        const PCondition &p = b.pconds.at("p"), &r = b.pconds.at("r");
        try {
          if (!b.u.countable(n).simple) return EvalResult::miss();
          if (!validateP(b.u, p).empty() || !validateP(b.u, r).empty())
            return EvalResult::miss();
          if (!conditionInCountable(b.u, p, n)) return EvalResult::miss();
          if (!inDN(b.u, r, n) || !leqP(b.u, r, p)) return EvalResult::miss();
        } catch (const Error&) {
          return EvalResult::miss();
        }
        return conclude(leqP(b.u, restrictToCountable(b.u, r, n), p),
                        "restriction above the inside condition failed");
      });

  add("P-7.8", "below the restriction, the inside parts of r are preserved", 30,
      gen([](SplitMix64& rng, const GenParams& prm) { return genAmalgN(rng, prm, false); }),
      [](const Bundle& b) {
        auto env = amalgNPremise(b, false);
        if (!env) return EvalResult::miss();
        const auto& n = b.u.countable(env->n);
        for (const auto& mi : env->r.a)
          if (n.modelFamily.count(mi) && !env->w.a.count(mi))
            return EvalResult::bad("side condition lost");
        for (const auto& [x, chain] : env->r.f) {
          if (!elemInC(b.u, x, n)) continue;
          auto it = env->w.f.find(x);
          if (it == env->w.f.end()) return EvalResult::bad("domain element lost");
          for (const TraceSet& k : chain)
            if (memSet(b.u, k, n) && !chainHas(it->second, k))
              return EvalResult::bad("chain member lost");
        }
        for (const auto& [key, val] : env->r.g) {
          if (!elemInC(b.u, key.x, n) || !memSet(b.u, key.k, n)) continue;
          if (!ords::subset(val, env->w.gAt(key.k, key.x)))
            return EvalResult::bad("g value lost");
        }
        return EvalResult::ok();
      });

  add("P-7.9", "fresh amalgam traces avoid the model and both domains", 5,
      gen([](SplitMix64& rng, const GenParams& prm) { return genAmalgN(rng, prm, false); }),
      [](const Bundle& b) {
        auto env = amalgNPremise(b, false);
        if (!env) return EvalResult::miss();
        const auto& n = b.u.countable(env->n);
        OrdVec sset = stationarySet(b.u, env->r.s);
        OrdVec wOrds = env->w.domOrds(), rOrds = env->r.domOrds();
        bool premise = false;
        for (const auto& mi : env->r.a) {
          const auto& m = b.u.countable(mi);
          if (!lessOrEquiv(cmp(b.u, n, m))) continue;
          for (uint32_t alpha : wOrds) {
            if (!ords::contains(sset, alpha) || !m.trace.contains(alpha)) continue;
            if (ords::contains(rOrds, alpha)) continue;
            premise = true;
            TraceSet t = m.trace.restrictBelow(Ord::fin(alpha));
            if (memSet(b.u, t, n)) return EvalResult::bad("fresh trace inside the model");
            if (env->r.hasSet(t) || env->w.hasSet(t))
              return EvalResult::bad("fresh trace collides with a domain");
          }
        }
        return premise ? EvalResult::ok() : EvalResult::miss();
      });

  add("P-7.10", "at most one ordinal witnesses the model cut inside a chain", 15,
      gen([](SplitMix64& rng, const GenParams& prm) { return genAmalgN(rng, prm, false); }),
      [](const Bundle& b) {
        auto env = amalgNPremise(b, false);
        if (!env) return EvalResult::miss();
        const auto& n = b.u.countable(env->n);
        OrdVec sset = stationarySet(b.u, env->r.s);
        bool premise = false;
        for (const auto& [x, chain] : env->r.f) {
          uint32_t hits = 0;
          for (uint32_t alpha : env->r.domOrds()) {
            if (!ords::contains(sset, alpha) || !n.trace.contains(alpha)) continue;
            TraceSet cut = n.trace.restrictBelow(Ord::fin(alpha));
            if ((!x.isOrd() && x.set() == cut) || chainHas(chain, cut)) ++hits;
          }
          premise |= hits > 0;
          if (hits > 1) return EvalResult::bad("two witnesses at " + x.str());
        }
        return premise ? EvalResult::ok() : EvalResult::miss();
      });

  add("P-7.12", "the countable amalgam extends both chain assignments", 30,
      gen([](SplitMix64& rng, const GenParams& prm) { return genAmalgN(rng, prm, false); }),
      [](const Bundle& b) {
        auto env = amalgNPremise(b);
        if (!env) return EvalResult::miss();
        for (const auto& [x, chain] : env->w.f) {
          if (!env->out.f.count(x)) return EvalResult::bad("w domain lost");
          for (const TraceSet& k : chain)
            if (!chainHas(env->out.chainAt(x), k)) return EvalResult::bad("w member lost");
        }
        for (const auto& [x, chain] : env->r.f) {
          if (!env->out.f.count(x)) return EvalResult::bad("r domain lost");
          for (const TraceSet& k : chain)
            if (!chainHas(env->out.chainAt(x), k)) return EvalResult::bad("r member lost");
        }
        return EvalResult::ok();
      });

  add("P-7.13", "the countable amalgam adds nothing inside the model or the inputs", 30,
      gen([](SplitMix64& rng, const GenParams& prm) { return genAmalgN(rng, prm, false); }),
      [](const Bundle& b) {
        auto env = amalgNPremise(b);
        if (!env) return EvalResult::miss();
        const auto& n = b.u.countable(env->n);
        for (const auto& [x, chain] : env->out.f) {
          if (elemInC(b.u, x, n) != (env->w.f.count(x) != 0))
            return EvalResult::bad("domain-inside-model mismatch at " + x.str());
          for (const TraceSet& k : chain) {
            if (env->w.f.count(x) && env->w.hasSet(k) && !chainHas(env->w.chainAt(x), k))
              return EvalResult::bad("new member under a w element");
            if (env->r.f.count(x) && env->r.hasSet(k) && !chainHas(env->r.chainAt(x), k))
              return EvalResult::bad("new member under an r element");
          }
        }
        return EvalResult::ok();
      });

  add("P-7.14", "the countable amalgam has well-formed provenance and chains", 30,
      gen([](SplitMix64& rng, const GenParams& prm) { return genAmalgN(rng, prm, false); }),
      [](const Bundle& b) {
        auto env = amalgNPremise(b);
        if (!env) return EvalResult::miss();
        for (const auto& v : validateP(b.u, env->out))
          if (v.clause == "C1" || v.clause == "C2")
            return EvalResult::bad(v.clause + " " + v.witness);
        return EvalResult::ok();
      });

  add("P-7.15", "the countable amalgam's chains restrict coherently", 30,
      gen([](SplitMix64& rng, const GenParams& prm) { return genAmalgN(rng, prm, false); }),
      [](const Bundle& b) {
        auto env = amalgNPremise(b);
        if (!env) return EvalResult::miss();
        for (const auto& v : validateP(b.u, env->out))
          if (v.clause == "C3") return EvalResult::bad(v.witness);
        return EvalResult::ok();
      });

  add("P-7.17", "the countable amalgam's g values stay in their windows", 30,
      gen([](SplitMix64& rng, const GenParams& prm) { return genAmalgN(rng, prm, false); }),
      [](const Bundle& b) {
        auto env = amalgNPremise(b);
        if (!env) return EvalResult::miss();
        for (const auto& v : validateP(b.u, env->out))
          if (v.clause == "C4" || v.clause == "C5")
            return EvalResult::bad(v.clause + " " + v.witness);
        return EvalResult::ok();
      });

  add("P-7.19", "the countable amalgam is a condition below both inputs", 30,
      gen([](SplitMix64& rng, const GenParams& prm) { return genAmalgN(rng, prm, false); }),
      [](const Bundle& b) {
        Counters counters;
        auto env = amalgNPremise(b, true, &counters);
        if (!env) return EvalResult::miss();
        if (!validateP(b.u, env->out).empty()) return EvalResult::bad("amalgam invalid");
        if (!leqP(b.u, env->out, env->w)) return EvalResult::bad("not below w");
        if (!leqP(b.u, env->out, env->r)) return EvalResult::bad("not below r");
        EvalResult res = EvalResult::ok();
        res.counters = std::move(counters);
        return res;
      });

  // --- section 8: interaction of the two restrictions -----------------------

  add("P-8.1", "the countable amalgam is monotone in its inside argument", 25,
      gen([](SplitMix64& rng, const GenParams& prm) { return genAmalgN(rng, prm, true); }),
      [](const Bundle& b) {
        auto env = amalgNPremise(b);
        if (!env || !b.pconds.count("v")) return EvalResult::miss();
        const PCondition& v = b.pconds.at("v");
        try {
          if (!validateP(b.u, v).empty()) return EvalResult::miss();
          if (!conditionInCountable(b.u, v, env->n)) return EvalResult::miss();
          if (!leqP(b.u, env->w, v)) return EvalResult::miss();
          if (!leqP(b.u, v, restrictToCountable(b.u, env->r, env->n)))
            return EvalResult::miss();
        } catch (const Error&) {
          return EvalResult::miss();
        }
        PCondition other = amalgCountable(b.u, v, env->r, env->n);
        return conclude(leqP(b.u, env->out, other), "amalgam not monotone");
      });

  add("P-8.2", "both dense classes can be entered below any condition with the model", 30,
      gen([](SplitMix64& rng, const GenParams& prm) {
        GenParams tuned = prm;
        tuned.maxUncountables = std::max<uint32_t>(tuned.maxUncountables, 1);
  tuned.minUncountables = 1;
        Bundle b;
        b.u = trialUniverse(rng, tuned);
        auto nId = pickSimpleCountable(b.u, rng, false);
        if (!nId || b.u.uncountables.empty()) return skipBundle();
        std::vector<ModelId> qs;
        for (const auto& [id, _] : b.u.uncountables) qs.push_back(id);
        InsideModel inN{ModelRef::countable(*nId)};
        PCondition p0 = buildP(b.u, StationaryRef::unionSet(), rng, 3, inN);
        b.picks["N"] = *nId;
        b.picks["Q"] = qs[rng.below(qs.size())];
        b.pconds["p"] = strengthenPInside(b.u, adjoinModel(b.u, p0, *nId), rng, 2, {});
        return b;
      }),
      [](const Bundle& b) {
        if (skipped(b) || !b.picks.count("N")) return EvalResult::miss();
        const PCondition& p = b.pconds.at("p");
        const ModelId &n = b.picks.at("N"), &q = b.picks.at("Q");
        try {
          if (!validateP(b.u, p).empty() || !p.a.count(n)) return EvalResult::miss();
        } catch (const Error&) {
          return EvalResult::miss();
        }
        PCondition s;
        try {
          s = makeDNDQ(b.u, p, n, q);
        } catch (const Error& e) {
          return EvalResult::bad(std::string("joint entry failed: ") + e.what());
        }
        if (!validateP(b.u, s).empty()) return EvalResult::bad("result invalid");
        if (!leqP(b.u, s, p)) return EvalResult::bad("not below the input");
        if (!inDN(b.u, s, n)) return EvalResult::bad("not in the countable class");
        if (!inDQ(b.u, s, q)) return EvalResult::bad("not in the uncountable class");
        return EvalResult::ok();
      });

  add("P-8.3", "restrictions transport the dense classes", 40, gen(genCommute86),
      [](const Bundle& b) {
        auto env = commute86Premise(b);
        if (!env) return EvalResult::miss();
        PCondition pn = restrictToCountable(b.u, env->p, env->n);
        if (!inDQ(b.u, pn, env->q)) return EvalResult::bad("p|N leaves D_Q");
        const auto* nq = interU(b.u, b.u.countable(env->n), b.u.uncountable(env->q));
        if (!nq) return EvalResult::bad("missing intersection model");
        PCondition pq = restrictToUncountable(b.u, env->p, env->q);
        if (!inDN(b.u, pq, nq->id)) return EvalResult::bad("p|Q leaves D_{N∩Q}");
        return EvalResult::ok();
      });

  add("P-8.4", "the two restrictions commute", 40, gen(genCommute86), [](const Bundle& b) {
    auto env = commute86Premise(b);
    if (!env) return EvalResult::miss();
    const auto* nq = interU(b.u, b.u.countable(env->n), b.u.uncountable(env->q));
    if (!nq || !nq->simple) return EvalResult::miss();
    PCondition lhs = restrictToUncountable(b.u, restrictToCountable(b.u, env->p, env->n),
                                           env->q);
    PCondition rhs =
        restrictToCountable(b.u, restrictToUncountable(b.u, env->p, env->q), nq->id);
    return conclude(lhs == rhs, "restrictions do not commute");
  });

  add("P-8.5", "the amalgam respects the uncountable class and restriction", 40,
      gen(genCommute86), [](const Bundle& b) {
        auto env = commute86Premise(b);
        if (!env) return EvalResult::miss();
        const auto* nq = interU(b.u, b.u.countable(env->n), b.u.uncountable(env->q));
        if (!nq || !nq->simple) return EvalResult::miss();
        PCondition amal = amalgCountable(b.u, env->qc, env->p, env->n);
        if (!inDQ(b.u, amal, env->q)) return EvalResult::bad("amalgam leaves D_Q");
        PCondition qq = restrictToUncountable(b.u, env->qc, env->q);
        if (!conditionInCountable(b.u, qq, env->n) ||
            !conditionInUncountable(b.u, qq, env->q))
          return EvalResult::bad("restricted condition escapes N ∩ Q");
        PCondition rhs = restrictToCountable(b.u, restrictToUncountable(b.u, env->p, env->q),
                                             nq->id);
        return conclude(leqP(b.u, qq, rhs), "restriction not below the double restriction");
      });

  add("P-8.6", "amalgamation commutes with restriction to an uncountable model", 40,
      gen(genCommute86), [](const Bundle& b) {
        auto env = commute86Premise(b);
        if (!env) return EvalResult::miss();
        const auto* nq = interU(b.u, b.u.countable(env->n), b.u.uncountable(env->q));
        if (!nq || !nq->simple) return EvalResult::miss();
        PCondition lhs = restrictToUncountable(
            b.u, amalgCountable(b.u, env->qc, env->p, env->n), env->q);
        PCondition rhs = amalgCountable(b.u, restrictToUncountable(b.u, env->qc, env->q),
                                        restrictToUncountable(b.u, env->p, env->q), nq->id);
        return conclude(lhs == rhs, "commuting identity failed");
      });

  // --- product forcing ------------------------------------------------------

  add("P-10.8", "opening coordinates is the weakest extension covering them", 30,
      gen([](SplitMix64& rng, const GenParams& prm) {
        Bundle b;
        b.u = trialUniverse(rng, prm);
        QCondition p = buildQ(b.u, rng, 4);
        OrdVec avail;
        for (uint32_t i = 0; i < b.u.config.lambdaStar; ++i)
          if (!p.fBig.count(i)) avail.push_back(i);
        if (avail.empty()) return skipBundle();
        OrdVec x{avail[rng.below(avail.size())]};
        QCondition wide = uplus(b.u, p, x);
        QCondition q = strengthenQInside(b.u, wide, rng, 3, {});
        b.qconds["p"] = p;
        b.qconds["q"] = q;
        b.ordsets["x"] = x;
        return b;
      }),
      [](const Bundle& b) {
        if (skipped(b) || !b.qconds.count("p")) return EvalResult::miss();
        const QCondition &p = b.qconds.at("p"), &q = b.qconds.at("q");
        const OrdVec& x = b.ordsets.at("x");
        if (!validateQ(b.u, p).empty() || !validateQ(b.u, q).empty())
          return EvalResult::miss();
        if (!ords::intersect(x, p.indexDomain()).empty()) return EvalResult::miss();
        QCondition wide = uplus(b.u, p, x);
        if (!validateQ(b.u, wide).empty()) return EvalResult::bad("widening invalid");
        if (!leqQ(b.u, wide, p)) return EvalResult::bad("widening not below");
        if (!ords::subset(x, wide.indexDomain())) return EvalResult::bad("indices missing");
        if (!leqQ(b.u, q, p) || !ords::subset(x, q.indexDomain()))
          return EvalResult::miss();
        return conclude(leqQ(b.u, q, wide), "universal property failed");
      });

  add("P-10.9", "coordinate lowering produces a stronger product condition", 30,
      gen([](SplitMix64& rng, const GenParams& prm) {
        Bundle b;
        b.u = trialUniverse(rng, prm);
        QCondition p = buildQ(b.u, rng, 4);
        if (p.fBig.empty()) return skipBundle();
        auto it = p.fBig.begin();
        std::advance(it, rng.below(p.fBig.size()));
        QCondition q = p;
        q.fBig[it->first] = strengthenPInside(b.u, it->second, rng, 3, {});
        b.qconds["p"] = p;
        b.qconds["q"] = q;
        b.nums["i"] = it->first;
        return b;
      }),
      [](const Bundle& b) {
        if (skipped(b) || !b.qconds.count("p")) return EvalResult::miss();
        const QCondition& p = b.qconds.at("p");
        uint32_t i = static_cast<uint32_t>(b.nums.at("i"));
        const QCondition& q = b.qconds.at("q");
        if (!validateQ(b.u, p).empty()) return EvalResult::miss();
        if (!q.fBig.count(i) || !leqP(b.u, q.fBig.at(i), p.fBig.at(i)))
          return EvalResult::miss();
        QCondition lowered = lowerCoordinates(b.u, p, {{i, q.fBig.at(i)}});
        if (!validateQ(b.u, lowered).empty()) return EvalResult::bad("lowering invalid");
        if (!leqQ(b.u, lowered, p)) return EvalResult::bad("lowering not below");
        if (lowered.a != p.a || lowered.indexDomain() != p.indexDomain())
          return EvalResult::bad("side data changed");
        return EvalResult::ok();
      });

  add("P-10.11", "coordinate projection is monotone and liftable", 30,
      gen([](SplitMix64& rng, const GenParams& prm) {
        Bundle b;
        b.u = trialUniverse(rng, prm);
        QCondition p = buildQ(b.u, rng, 4);
        if (p.fBig.empty()) return skipBundle();
        auto it = p.fBig.begin();
        std::advance(it, rng.below(p.fBig.size()));
        b.qconds["p"] = p;
        b.nums["i"] = it->first;
        b.pconds["v"] = strengthenPInside(b.u, it->second, rng, 3, {});
        return b;
      }),
      [](const Bundle& b) {
        if (skipped(b) || !b.qconds.count("p")) return EvalResult::miss();
        const QCondition& p = b.qconds.at("p");
        uint32_t i = static_cast<uint32_t>(b.nums.at("i"));
        const PCondition& v = b.pconds.at("v");
        if (!validateQ(b.u, p).empty() || !p.fBig.count(i)) return EvalResult::miss();
        if (!leqP(b.u, v, projectCoordinate(b.u, p, i))) return EvalResult::miss();
        QCondition r = lowerCoordinates(b.u, p, {{i, v}});
        if (!(projectCoordinate(b.u, r, i) == v)) return EvalResult::bad("lift misses v");
        if (!leqQ(b.u, r, p)) return EvalResult::bad("lift not below");
        QCondition maxQ;
        if (!projectCoordinate(b.u, maxQ, i).isMax())
          return EvalResult::bad("maximum does not project to maximum");
        return EvalResult::ok();
      });

  add("P-10.13", "index obligations add over amalgams", 25, gen(genAdditivity),
      [](const Bundle& b) {
        auto env = additivityPremise(b);
        if (!env) return EvalResult::miss();
        OrdVec lhs = sStar(env->u, env->all);
        OrdVec rhs = ords::unite(sStar(env->u, env->a), sStar(env->u, env->b));
        return conclude(lhs == rhs, "s* not additive");
      });

  add("P-11.13", "product restriction is monotone", 25,
      gen([](SplitMix64& rng, const GenParams& prm) {
        Bundle b = genAmalgProd(rng, prm, false, true);
        if (skipped(b)) return b;
        // Reinterpret: q is in D(m); build a weaker member of D(m) above it.
        return b;
      }),
      [](const Bundle& b) {
        auto env = amalgProdPremise(b, false);
        if (!env) return EvalResult::miss();
        QCondition qm = restrictQ(b.u, env->q, env->m);
        if (!leqQ(b.u, env->q, qm)) return EvalResult::bad("input not below restriction");
        if (!validateQ(b.u, qm).empty()) return EvalResult::bad("restriction invalid");
        if (!qconditionInModel(b.u, qm, env->m))
          return EvalResult::bad("restriction escapes the model");
        return EvalResult::ok();
      });

  add("P-11.14", "below the product restriction, inside parts are preserved", 25,
      gen([](SplitMix64& rng, const GenParams& prm) { return genAmalgProd(rng, prm, false, true); }),
      [](const Bundle& b) {
        auto env = amalgProdPremise(b, false);
        if (!env) return EvalResult::miss();
        const auto& idx = env->m.isCountable ? b.u.countable(env->m.id).indexSet
                                             : b.u.uncountable(env->m.id).indexSet;
        for (const auto& mi : env->q.a) {
          bool member = env->m.isCountable ? b.u.countable(env->m.id).modelFamily.count(mi) != 0
                                           : b.u.uncountable(env->m.id).modelFamily.count(mi) != 0;
          if (member && !env->w.a.count(mi)) return EvalResult::bad("side condition lost");
        }
        for (const auto& [i, cond] : env->q.fBig) {
          if (!idx.count(i)) continue;
          if (!env->w.fBig.count(i)) return EvalResult::bad("coordinate lost");
          PCondition ri = env->m.isCountable ? restrictToCountable(b.u, cond, env->m.id)
                                             : restrictToUncountable(b.u, cond, env->m.id);
          if (!leqP(b.u, env->w.fBig.at(i), ri))
            return EvalResult::bad("coordinate not below the restricted coordinate");
        }
        return EvalResult::ok();
      });

  add("P-11.16", "the product amalgam is a condition below both inputs", 30,
      gen([](SplitMix64& rng, const GenParams& prm) { return genAmalgProd(rng, prm, false, true); }),
      [](const Bundle& b) {
        auto env = amalgProdPremise(b);
        if (!env) return EvalResult::miss();
        if (!ords::subset(env->w.indexDomain(), env->q.indexDomain()))
          return EvalResult::miss();
        if (env->out.normalized) return EvalResult::bad("unexpected widening");
        if (!validateQ(b.u, env->out.cond).empty()) return EvalResult::bad("amalgam invalid");
        if (!leqQ(b.u, env->out.cond, env->w)) return EvalResult::bad("not below w");
        if (!leqQ(b.u, env->out.cond, env->q)) return EvalResult::bad("not below q");
        return EvalResult::ok();
      });

  add("P-11.17", "widening commutes with product restriction", 30,
      gen([](SplitMix64& rng, const GenParams& prm) {
        Bundle b = genAmalgProd(rng, prm, false, true);
        if (skipped(b)) return b;
        const QCondition& q = b.qconds.at("q");
        OrdVec avail;
        for (uint32_t i = 0; i < b.u.config.lambdaStar; ++i)
          if (!q.fBig.count(i)) avail.push_back(i);
        if (avail.empty()) {
          b.nums["skip"] = 1;
          return b;
        }
        b.ordsets["x"] = OrdVec{avail[rng.below(avail.size())]};
        return b;
      }),
      [](const Bundle& b) {
        auto env = amalgProdPremise(b, false);
        if (!env || !b.ordsets.count("x")) return EvalResult::miss();
        const OrdVec& x = b.ordsets.at("x");
        if (!ords::intersect(x, env->q.indexDomain()).empty()) return EvalResult::miss();
        QCondition lhs = restrictQ(b.u, uplus(b.u, env->q, x), env->m);
        const auto& idx = env->m.isCountable ? b.u.countable(env->m.id).indexSet
                                             : b.u.uncountable(env->m.id).indexSet;
        OrdVec xin;
        for (uint32_t i : x)
          if (idx.count(i)) xin.push_back(i);
        QCondition rhs = uplus(b.u, restrictQ(b.u, env->q, env->m), xin);
        return conclude(lhs == rhs, "widening does not commute with restriction");
      });

  add("P-11.18", "the product amalgam absorbs extra coordinates of the inside condition", 25,
      gen([](SplitMix64& rng, const GenParams& prm) { return genAmalgProd(rng, prm, false, false); }),
      [](const Bundle& b) {
        auto env = amalgProdPremise(b);
        if (!env) return EvalResult::miss();
        OrdVec extra = ords::diff(env->w.indexDomain(), env->q.indexDomain());
        if (!validateQ(b.u, env->out.cond).empty()) return EvalResult::bad("amalgam invalid");
        if (env->out.normalized != !extra.empty())
          return EvalResult::bad("widening flag wrong");
        if (env->out.addedIndices != extra) return EvalResult::bad("wrong added indices");
        if (!leqQ(b.u, env->out.cond, env->w)) return EvalResult::bad("not below w");
        if (!leqQ(b.u, env->out.cond, env->q)) return EvalResult::bad("not below q");
        if (!extra.empty() &&
            !leqQ(b.u, env->out.cond, uplus(b.u, env->q, extra)))
          return EvalResult::bad("not below the widened q");
        return EvalResult::ok();
      });

  add("P-12.1", "the product amalgam is monotone in its inside argument", 20,
      gen([](SplitMix64& rng, const GenParams& prm) {
        Bundle b = genAmalgProd(rng, prm, true, true);
        if (skipped(b)) return b;
        // Insert a middle condition between the restriction and w.
        ModelRef m = ModelRef::countable(b.picks.at("m"));
        QCondition base = restrictQ(b.u, b.qconds.at("q"), m);
        QCondition v = strengthenQIndices(b.u, base, rng, 1, InsideModel{m},
                                          b.qconds.at("q").indexDomain());
        QCondition w = strengthenQIndices(b.u, v, rng, 2, InsideModel{m},
                                          b.qconds.at("q").indexDomain());
        b.qconds["v"] = v;
        b.qconds["w"] = w;
        return b;
      }),
      [](const Bundle& b) {
        auto env = amalgProdPremise(b);
        if (!env || !b.qconds.count("v")) return EvalResult::miss();
        const QCondition& v = b.qconds.at("v");
        try {
          if (!validateQ(b.u, v).empty()) return EvalResult::miss();
          if (!qconditionInModel(b.u, v, env->m)) return EvalResult::miss();
          if (!leqQ(b.u, env->w, v)) return EvalResult::miss();
          if (!leqQ(b.u, v, restrictQ(b.u, env->q, env->m))) return EvalResult::miss();
          if (!ords::subset(v.indexDomain(), env->q.indexDomain()))
            return EvalResult::miss();
        } catch (const Error&) {
          return EvalResult::miss();
        }
        OplusQResult other = oplusQ(b.u, v, env->q, env->m);
        return conclude(leqQ(b.u, env->out.cond, other.cond), "amalgam not monotone");
      });

  add("P-12.2", "both product dense classes can be entered jointly", 20,
      gen([](SplitMix64& rng, const GenParams& prm) {
        GenParams tuned = prm;
        tuned.maxUncountables = std::max<uint32_t>(tuned.maxUncountables, 1);
  tuned.minUncountables = 1;
        Bundle b;
        b.u = trialUniverse(rng, tuned);
        auto nId = pickSimpleCountable(b.u, rng, false);
        if (!nId || b.u.uncountables.empty()) return skipBundle();
        std::vector<ModelId> ps;
        for (const auto& [id, _] : b.u.uncountables) ps.push_back(id);
        InsideModel inN{ModelRef::countable(*nId)};
        QCondition q0 = buildQ(b.u, rng, 2, inN);
        b.picks["N"] = *nId;
        b.picks["P"] = ps[rng.below(ps.size())];
        b.qconds["p"] = strengthenQInside(b.u, qAdjoinModel(b.u, q0, *nId), rng, 2, {});
        return b;
      }),
      [](const Bundle& b) {
        if (skipped(b) || !b.picks.count("N")) return EvalResult::miss();
        const QCondition& p = b.qconds.at("p");
        const ModelId &n = b.picks.at("N"), &pm = b.picks.at("P");
        if (!validateQ(b.u, p).empty() || !p.a.count(n)) return EvalResult::miss();
        QCondition s;
        try {
          s = qMakeDNDP(b.u, p, n, pm);
        } catch (const Error& e) {
          return EvalResult::bad(std::string("joint entry failed: ") + e.what());
        }
        if (!validateQ(b.u, s).empty()) return EvalResult::bad("result invalid");
        if (!leqQ(b.u, s, p)) return EvalResult::bad("not below the input");
        if (!inDNQ(b.u, s, n)) return EvalResult::bad("not in D(N)");
        if (!inDPQ(b.u, s, pm)) return EvalResult::bad("not in D(P)");
        return EvalResult::ok();
      });

  add("P-12.3", "product restrictions transport the dense classes", 40, gen(genCommute126),
      [](const Bundle& b) {
        auto env = commute126Premise(b);
        if (!env) return EvalResult::miss();
        QCondition pn = restrictQ(b.u, env->pc, ModelRef::countable(env->n));
        if (!inDPQ(b.u, pn, env->p)) return EvalResult::bad("p|N leaves D(P)");
        const auto* np = interU(b.u, b.u.countable(env->n), b.u.uncountable(env->p));
        if (!np) return EvalResult::bad("missing intersection model");
        QCondition pp = restrictQ(b.u, env->pc, ModelRef::uncountable(env->p));
        if (!inDNQ(b.u, pp, np->id)) return EvalResult::bad("p|P leaves D(N∩P)");
        return EvalResult::ok();
      });

  add("P-12.4", "the two product restrictions commute", 40, gen(genCommute126),
      [](const Bundle& b) {
        auto env = commute126Premise(b);
        if (!env) return EvalResult::miss();
        const auto* np = interU(b.u, b.u.countable(env->n), b.u.uncountable(env->p));
        if (!np || !np->simple) return EvalResult::miss();
        QCondition lhs = restrictQ(b.u, restrictQ(b.u, env->pc, ModelRef::countable(env->n)),
                                   ModelRef::uncountable(env->p));
        QCondition rhs = restrictQ(b.u, restrictQ(b.u, env->pc, ModelRef::uncountable(env->p)),
                                   ModelRef::countable(np->id));
        return conclude(lhs == rhs, "product restrictions do not commute");
      });

  add("P-12.5", "the product amalgam respects the uncountable class and restriction", 40,
      gen(genCommute126), [](const Bundle& b) {
        auto env = commute126Premise(b);
        if (!env) return EvalResult::miss();
        const auto* np = interU(b.u, b.u.countable(env->n), b.u.uncountable(env->p));
        if (!np || !np->simple) return EvalResult::miss();
        OplusQResult amal = oplusQ(b.u, env->qc, env->pc, ModelRef::countable(env->n));
        if (amal.normalized) return EvalResult::miss();
        if (!inDPQ(b.u, amal.cond, env->p)) return EvalResult::bad("amalgam leaves D(P)");
        QCondition qp = restrictQ(b.u, env->qc, ModelRef::uncountable(env->p));
        if (!qconditionInModel(b.u, qp, ModelRef::countable(env->n)) ||
            !qconditionInModel(b.u, qp, ModelRef::uncountable(env->p)))
          return EvalResult::bad("restricted condition escapes N ∩ P");
        QCondition rhs = restrictQ(b.u, restrictQ(b.u, env->pc, ModelRef::uncountable(env->p)),
                                   ModelRef::countable(np->id));
        return conclude(leqQ(b.u, qp, rhs), "restriction not below the double restriction");
      });

  add("P-12.6", "product amalgamation commutes with restriction", 40, gen(genCommute126),
      [](const Bundle& b) {
        auto env = commute126Premise(b);
        if (!env) return EvalResult::miss();
        const auto* np = interU(b.u, b.u.countable(env->n), b.u.uncountable(env->p));
        if (!np || !np->simple) return EvalResult::miss();
        OplusQResult amal = oplusQ(b.u, env->qc, env->pc, ModelRef::countable(env->n));
        if (amal.normalized) return EvalResult::miss();
        QCondition lhs = restrictQ(b.u, amal.cond, ModelRef::uncountable(env->p));
        OplusQResult rhsAmal =
            oplusQ(b.u, restrictQ(b.u, env->qc, ModelRef::uncountable(env->p)),
                   restrictQ(b.u, env->pc, ModelRef::uncountable(env->p)),
                   ModelRef::countable(np->id));
        if (rhsAmal.normalized) return EvalResult::miss();
        return conclude(lhs == rhsAmal.cond, "product commuting identity failed");
      });

  // --- universe-module hull properties --------------------------------------

  add("P-hull-monotone", "hull membership is transitive through set targets", 20, genU,
      [](const Bundle& b) {
        if (skipped(b)) return EvalResult::miss();
        bool premise = false;
        for (const auto& [ni, n] : b.u.countables) {
          for (Ord alpha : lambdaCuts(b.u)) {
            TraceSet t = n.trace.restrictBelow(alpha);
            if (t.empty()) continue;
            for (const auto& [mi, m1] : b.u.countables) {
              if (!memSet(b.u, t, m1)) continue;
              for (const auto& k : n.setFamily) {
                if (!alpha.isKappa() && k.sup() >= alpha.finite()) continue;
                premise = true;
                bool inner, outer;
                try {
                  inner = hull(b.u, k, HullTarget::set(t));
                  outer = hull(b.u, k, HullTarget::set(m1.trace));
                } catch (const Error&) {
                  continue;
                }
                if (inner && !outer)
                  return EvalResult::bad("transitivity fails at " + k.str());
              }
            }
          }
        }
        return premise ? EvalResult::ok() : EvalResult::miss();
      });

  add("P-hull-repindep", "hull membership does not depend on the representation", 30, genU,
      [](const Bundle& b) {
        if (skipped(b)) return EvalResult::miss();
        bool premise = false;
        std::map<TraceSet, std::vector<std::pair<ModelId, Ord>>> byValue;
        for (const auto& [mi, m] : b.u.countables)
          for (Ord alpha : lambdaCuts(b.u)) {
            TraceSet t = m.trace.restrictBelow(alpha);
            if (!t.empty()) byValue[t].emplace_back(mi, alpha);
          }
        for (const auto& [t, reps] : byValue) {
          if (reps.size() < 2) continue;
          std::set<TraceSet> pool;
          for (const auto& [mi, alpha] : reps) {
            const auto& fam = b.u.countable(mi).setFamily;
            pool.insert(fam.begin(), fam.end());
          }
          for (const auto& k : pool) {
            premise = true;
            int verdict = -1;
            for (const auto& [mi, alpha] : reps) {
              bool in = memSet(b.u, k, b.u.countable(mi)) &&
                        (alpha.isKappa() || k.empty() || k.sup() < alpha.finite());
              if (verdict == -1) verdict = in ? 1 : 0;
              if (verdict != (in ? 1 : 0))
                return EvalResult::bad("representations disagree on " + k.str());
            }
          }
        }
        return premise ? EvalResult::ok() : EvalResult::miss();
      });

  return cat;
}

}  // namespace

const std::vector<PropertyDef>& catalog() {
  static const std::vector<PropertyDef> cat = buildCatalog();
  return cat;
}

const PropertyDef& property(const std::string& id) {
  for (const auto& p : catalog())
    if (p.id == id) return p;
  fail(Errc::UnknownProperty, "no property '" + id + "' in the catalog");
}

bool hasProperty(const std::string& id) {
  for (const auto& p : catalog())
    if (p.id == id) return true;
  return false;
}

}  // namespace scf::harness
