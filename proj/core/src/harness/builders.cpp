#include "scf/harness/builders.hpp"

#include "scf/fixtures.hpp"
#include "scf/qforcing.hpp"

namespace scf::harness {

json toJson(const Bundle& b) {
  json picks = json::object();
  for (const auto& [k, v] : b.picks) picks[k] = v;
  json pconds = json::object();
  for (const auto& [k, v] : b.pconds) pconds[k] = scf::toJson(v);
  json qconds = json::object();
  for (const auto& [k, v] : b.qconds) qconds[k] = scf::toJson(v);
  json nums = json::object();
  for (const auto& [k, v] : b.nums) nums[k] = v;
  json ordsets = json::object();
  for (const auto& [k, v] : b.ordsets) ordsets[k] = v;
  json idsets = json::object();
  for (const auto& [k, v] : b.idsets) idsets[k] = v;
  return json{{"idsets", idsets},   {"nums", nums},       {"ordsets", ordsets},
              {"pconds", pconds},   {"picks", picks},     {"qconds", qconds},
              {"universe", scf::toJson(b.u)}};
}

Bundle bundleFromJson(const json& j) {
  Bundle b;
  b.u = universeFromJson(j.at("universe"));
  for (auto it = j.at("picks").begin(); it != j.at("picks").end(); ++it)
    b.picks[it.key()] = it->get<std::string>();
  for (auto it = j.at("pconds").begin(); it != j.at("pconds").end(); ++it)
    b.pconds[it.key()] = pconditionFromJson(*it);
  for (auto it = j.at("qconds").begin(); it != j.at("qconds").end(); ++it)
    b.qconds[it.key()] = qconditionFromJson(*it);
  for (auto it = j.at("nums").begin(); it != j.at("nums").end(); ++it)
    b.nums[it.key()] = it->get<int64_t>();
  for (auto it = j.at("ordsets").begin(); it != j.at("ordsets").end(); ++it)
    b.ordsets[it.key()] = it->get<OrdVec>();
  for (auto it = j.at("idsets").begin(); it != j.at("idsets").end(); ++it)
    b.idsets[it.key()] = it->get<std::vector<ModelId>>();
  return b;
}

bool InsideModel::ordAllowed(const Universe& u, uint32_t alpha) const {
  if (!m) return true;
  return m->isCountable ? u.countable(m->id).trace.contains(alpha)
                        : alpha < u.uncountable(m->id).cut;
}

bool InsideModel::modelAllowed(const Universe& u, const ModelId& id) const {
  if (!m) return true;
  return m->isCountable ? u.countable(m->id).modelFamily.count(id) != 0
                        : u.uncountable(m->id).modelFamily.count(id) != 0;
}

namespace {

bool insideOk(const Universe& u, const PCondition& p, const InsideModel& inside) {
  if (!inside.m) return true;
  return inside.m->isCountable ? conditionInCountable(u, p, inside.m->id)
                               : conditionInUncountable(u, p, inside.m->id);
}

template <typename T>
const T* pickFrom(const std::vector<T>& v, SplitMix64& rng) {
  if (v.empty()) return nullptr;
  return &v[rng.below(v.size())];
}

/// Adjoins a merely comparable model to the side conditions: extends by the
/// new remainder obligations, splices the model's cuts into every ordinal
/// chain (and into the chains above them), and copies the g values the
/// coherence clause demands. No containment is assumed, so the result can be
/// invalid; callers validate and revert.
PCondition spliceModel(const Universe& u, const PCondition& p, const ModelId& mId) {
  std::set<ModelId> grown = p.a;
  grown.insert(mId);
  if (!isAdequate(u, grown)) fail(Errc::PreconditionFailed, "not comparable");
  OrdVec sset = stationarySet(u, p.s);
  OrdVec obligations =
      ords::diff(ords::intersect(rStar(u, grown), sset), p.domOrds());
  PCondition q = extendOrdinals(u, p, obligations);
  q.a = grown;
  const auto& m = u.countable(mId);
  for (uint32_t alpha : q.domOrds()) {
    if (!m.trace.contains(alpha)) continue;
    TraceSet t = m.trace.restrictBelow(Ord::fin(alpha));
    DomainElement alphaE = DomainElement::ordS(alpha);
    DomainElement tE = DomainElement::setElem(t);
    Chain chain = q.chainAt(alphaE);
    if (std::find(chain.begin(), chain.end(), t) != chain.end()) continue;
    Chain below;
    for (const TraceSet& l : chain) {
      bool in;
      try {
        in = hull(u, l, HullTarget::set(t));
      } catch (const Error&) {
        in = false;
      }
      if (in) below.push_back(l);
    }
    chain.push_back(t);
    std::sort(chain.begin(), chain.end(), chainLess);
    q.f[alphaE] = chain;
    if (!q.f.count(tE)) q.f[tE] = below;
    // The new trace also belongs to every larger chain member.
    for (const TraceSet& x : q.chainAt(alphaE)) {
      if (x == t) continue;
      bool tInX;
      try {
        tInX = hull(u, t, HullTarget::set(x));
      } catch (const Error&) {
        tInX = false;
      }
      if (!tInX) continue;
      DomainElement xE = DomainElement::setElem(x);
      if (!q.f.count(xE)) continue;
      Chain xc = q.f.at(xE);
      if (std::find(xc.begin(), xc.end(), t) == xc.end()) {
        xc.push_back(t);
        std::sort(xc.begin(), xc.end(), chainLess);
        q.f[xE] = xc;
      }
    }
    // Coherence: g at the new key absorbs the g values of every key whose
    // chain contains it.
    for (const TraceSet& k : below) {
      OrdVec val = q.gAt(k, alphaE);
      for (const auto& [y, ychain] : q.f) {
        if (std::find(ychain.begin(), ychain.end(), t) == ychain.end()) continue;
        val = ords::unite(val, q.gAt(k, y));
      }
      if (!val.empty()) q.g[GKey{k, tE}] = val;
    }
  }
  q.normalize(u);
  return q;
}

/// One random validity-preserving step; returns p unchanged when the chosen
/// move does not apply.
PCondition stepP(const Universe& u, PCondition p, SplitMix64& rng, const InsideModel& inside) {
  switch (rng.below(7)) {
    case 0: {  // extend by fresh stationary ordinals
      OrdVec sset = stationarySet(u, p.s);
      OrdVec dom = p.domOrds();
      OrdVec candidates;
      for (uint32_t alpha : ords::diff(sset, dom))
        if (inside.ordAllowed(u, alpha)) candidates.push_back(alpha);
      if (candidates.empty()) return p;
      OrdVec x{candidates[rng.below(candidates.size())]};
      return extendOrdinals(u, p, x);
    }
    case 1: {  // adjoin a model containing the condition
      std::vector<ModelId> candidates;
      for (const auto& [id, m] : u.countables) {
        if (p.a.count(id) || !inside.modelAllowed(u, id)) continue;
        if (conditionInCountable(u, p, id)) candidates.push_back(id);
      }
      if (auto* id = pickFrom(candidates, rng)) return adjoinModel(u, p, *id);
      return p;
    }
    case 2:
      return saturateG(u, p);
    case 3: {  // grow a g value at a chain top
      std::vector<std::pair<GKey, uint32_t>> candidates;
      for (const auto& [x, chain] : p.f) {
        if (chain.empty()) continue;
        const TraceSet& top = chain.back();
        uint32_t supK = top.sup();
        OrdVec window;
        if (x.isOrd()) {
          for (uint32_t v = supK; v < x.alpha(); ++v) window.push_back(v);
        } else {
          for (uint32_t v : x.set().elems())
            if (v >= supK) window.push_back(v);
        }
        OrdVec cur = p.gAt(top, x);
        for (uint32_t v : ords::diff(window, cur))
          if (inside.ordAllowed(u, v)) candidates.emplace_back(GKey{top, x}, v);
      }
      if (auto* c = pickFrom(candidates, rng)) {
        PCondition q = p;
        OrdVec v = q.gAt(c->first.k, c->first.x);
        v.push_back(c->second);
        q.g[c->first] = ords::normalized(v);
        q.normalize(u);
        return q;
      }
      return p;
    }
    case 4: {  // close under a side-condition model
      std::vector<ModelId> candidates(p.a.begin(), p.a.end());
      if (auto* id = pickFrom(candidates, rng)) return closeUnderN(u, p, *id);
      return p;
    }
    case 6: {  // splice a merely comparable model
      std::vector<ModelId> candidates;
      for (const auto& [id, m] : u.countables) {
        if (p.a.count(id) || !inside.modelAllowed(u, id)) continue;
        bool comparable = true;
        for (const auto& have : p.a)
          comparable &= compare(u, m, u.countable(have)) != ModelRel::Incomparable;
        if (comparable) candidates.push_back(id);
      }
      if (auto* id = pickFrom(candidates, rng)) return spliceModel(u, p, *id);
      return p;
    }
    default: {  // close under an uncountable model
      std::vector<ModelId> candidates;
      for (const auto& [id, q] : u.uncountables) candidates.push_back(id);
      if (auto* id = pickFrom(candidates, rng)) return closeUnderQ(u, p, *id);
      return p;
    }
  }
}

}  // namespace

PCondition strengthenPInside(const Universe& u, const PCondition& p, SplitMix64& rng,
                             uint32_t steps, const InsideModel& inside) {
  PCondition cur = p;
  for (uint32_t s = 0; s < steps; ++s) {
    PCondition next;
    try {
      next = stepP(u, cur, rng, inside);
    } catch (const Error&) {
      continue;  // inapplicable move
    }
    if (!insideOk(u, next, inside)) continue;
    if (!validateP(u, next).empty()) continue;
    cur = std::move(next);
  }
  return cur;
}

PCondition buildP(const Universe& u, StationaryRef ref, SplitMix64& rng, uint32_t steps,
                  const InsideModel& inside) {
  PCondition p;
  p.s = ref;
  // Seed with a side-condition model when one is available.
  std::vector<ModelId> seeds;
  for (const auto& [id, m] : u.countables)
    if (inside.modelAllowed(u, id)) seeds.push_back(id);
  if (!seeds.empty() && rng.chance(4, 5)) p.a.insert(seeds[rng.below(seeds.size())]);
  p.normalize(u);
  if (!validateP(u, p).empty()) {
    p = PCondition{};
    p.s = ref;
  }
  p = strengthenPInside(u, p, rng, steps, inside);

  // Enrichment pass: adjoin a couple of willing models, then open the
  // stationary ordinal shared by the most side conditions, so chains with
  // several members are common.
  uint32_t adjoined = 0;
  for (const auto& [id, m] : u.countables) {
    if (adjoined >= 2) break;
    if (p.a.count(id) || !inside.modelAllowed(u, id)) continue;
    if (!conditionInCountable(u, p, id) || !rng.chance(3, 4)) continue;
    try {
      PCondition next = adjoinModel(u, p, id);
      if (insideOk(u, next, inside) && validateP(u, next).empty()) {
        p = std::move(next);
        ++adjoined;
      }
    } catch (const Error&) {
    }
  }
  OrdVec dom = p.domOrds();
  uint32_t bestAlpha = 0;
  size_t bestCover = 0;
  for (uint32_t alpha : ords::diff(stationarySet(u, p.s), dom)) {
    if (!inside.ordAllowed(u, alpha)) continue;
    size_t cover = 0;
    for (const auto& id : p.a)
      cover += u.countable(id).trace.contains(alpha) ? 1 : 0;
    if (cover > bestCover) {
      bestCover = cover;
      bestAlpha = alpha;
    }
  }
  if (bestCover >= 1 && rng.chance(3, 5)) {
    try {
      PCondition next = extendOrdinals(u, p, {bestAlpha});
      if (insideOk(u, next, inside) && validateP(u, next).empty()) p = std::move(next);
    } catch (const Error&) {
    }
  }
  return p;
}

PCondition makeDN(const Universe& u, const PCondition& p, const ModelId& n) {
  return saturateG(u, closeUnderN(u, p, n));
}

PCondition makeDQ(const Universe& u, const PCondition& p, const ModelId& q) {
  return closeUnderQ(u, p, q);
}

PCondition makeDNDQ(const Universe& u, const PCondition& p, const ModelId& n,
                    const ModelId& q) {
  return saturateG(u, closeUnderQ(u, closeUnderN(u, p, n), q));
}

QCondition qAdjoinModel(const Universe& u, const QCondition& p, const ModelId& n) {
  QCondition q = p;
  for (auto& [i, cond] : q.fBig) cond = adjoinModel(u, cond, n);
  q.a.insert(n);
  q.normalize(u);
  return q;
}

namespace {

bool insideOkQ(const Universe& u, const QCondition& p, const InsideModel& inside) {
  if (!inside.m) return true;
  return qconditionInModel(u, p, *inside.m);
}

QCondition stepQ(const Universe& u, QCondition p, SplitMix64& rng, const InsideModel& inside,
                 const std::optional<OrdVec>& allowedIndices) {
  switch (rng.below(4)) {
    case 0: {  // open a fresh coordinate
      OrdVec candidates;
      for (uint32_t i = 0; i < u.config.lambdaStar; ++i) {
        if (p.fBig.count(i)) continue;
        if (allowedIndices && !ords::contains(*allowedIndices, i)) continue;
        if (inside.m) {
          const auto& idx = inside.m->isCountable ? u.countable(inside.m->id).indexSet
                                                  : u.uncountable(inside.m->id).indexSet;
          if (!idx.count(i)) continue;
        }
        candidates.push_back(i);
      }
      if (candidates.empty()) return p;
      return uplus(u, p, {candidates[rng.below(candidates.size())]});
    }
    case 1: {  // adjoin a model everywhere
      std::vector<ModelId> candidates;
      for (const auto& [id, m] : u.countables) {
        if (p.a.count(id) || !inside.modelAllowed(u, id)) continue;
        bool ok = true;
        for (const auto& [i, cond] : p.fBig) {
          ok &= m.indexSet.count(i) && conditionInCountable(u, cond, id);
        }
        if (ok) candidates.push_back(id);
      }
      if (auto* id = pickFrom(candidates, rng)) return qAdjoinModel(u, p, *id);
      return p;
    }
    default: {  // strengthen one coordinate
      if (p.fBig.empty()) return p;
      auto it = p.fBig.begin();
      std::advance(it, rng.below(p.fBig.size()));
      PCondition stronger = strengthenPInside(u, it->second, rng, 2, inside);
      return lowerCoordinates(u, p, {{it->first, stronger}});
    }
  }
}

QCondition strengthenQ(const Universe& u, const QCondition& p, SplitMix64& rng, uint32_t steps,
                       const InsideModel& inside, const std::optional<OrdVec>& allowedIndices) {
  QCondition cur = p;
  for (uint32_t s = 0; s < steps; ++s) {
    QCondition next;
    try {
      next = stepQ(u, cur, rng, inside, allowedIndices);
    } catch (const Error&) {
      continue;
    }
    if (!insideOkQ(u, next, inside)) continue;
    if (!validateQ(u, next).empty()) continue;
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

QCondition strengthenQInside(const Universe& u, const QCondition& p, SplitMix64& rng,
                             uint32_t steps, const InsideModel& inside) {
  return strengthenQ(u, p, rng, steps, inside, std::nullopt);
}

QCondition strengthenQIndices(const Universe& u, const QCondition& p, SplitMix64& rng,
                              uint32_t steps, const InsideModel& inside,
                              const std::optional<OrdVec>& allowedIndices) {
  return strengthenQ(u, p, rng, steps, inside, allowedIndices);
}

QCondition buildQ(const Universe& u, SplitMix64& rng, uint32_t steps,
                  const InsideModel& inside) {
  QCondition q;
  std::vector<ModelId> seeds;
  for (const auto& [id, m] : u.countables)
    if (inside.modelAllowed(u, id)) seeds.push_back(id);
  if (!seeds.empty() && rng.chance(4, 5)) q.a.insert(seeds[rng.below(seeds.size())]);
  if (!validateQ(u, q).empty()) q = QCondition{};
  return strengthenQ(u, q, rng, steps, inside, std::nullopt);
}

QCondition makeDNQ(const Universe& u, const QCondition& p, const ModelId& n) {
  std::set<ModelId> b = closureUnderCountable(u, p.a, n);
  QCondition q = uplus(u, p, ords::diff(sStar(u, b), p.indexDomain()));
  std::map<uint32_t, PCondition> repl;
  const auto& idx = u.countable(n).indexSet;
  for (const auto& [i, cond] : q.fBig)
    if (idx.count(i)) repl[i] = makeDN(u, cond, n);
  q = lowerCoordinates(u, q, repl);
  q.a = std::move(b);
  q.normalize(u);
  return q;
}

QCondition makeDPQ(const Universe& u, const QCondition& p, const ModelId& pModel) {
  std::set<ModelId> b = closureUnderUncountable(u, p.a, pModel);
  QCondition q = uplus(u, p, ords::diff(sStar(u, b), p.indexDomain()));
  std::map<uint32_t, PCondition> repl;
  const auto& idx = u.uncountable(pModel).indexSet;
  for (const auto& [i, cond] : q.fBig)
    if (idx.count(i)) repl[i] = makeDQ(u, cond, pModel);
  q = lowerCoordinates(u, q, repl);
  q.a = std::move(b);
  q.normalize(u);
  return q;
}

QCondition qMakeDNDP(const Universe& u, const QCondition& p, const ModelId& n,
                     const ModelId& pModel) {
  std::set<ModelId> b1 = closureUnderCountable(u, p.a, n);
  std::set<ModelId> b = closureUnderUncountable(u, b1, pModel);
  QCondition q = uplus(u, p, ords::diff(sStar(u, b), p.indexDomain()));
  const auto& nIdx = u.countable(n).indexSet;
  const auto& pIdx = u.uncountable(pModel).indexSet;
  std::map<uint32_t, PCondition> repl;
  for (const auto& [i, cond] : q.fBig) {
    bool inN = nIdx.count(i) != 0, inP = pIdx.count(i) != 0;
    if (inN && inP) repl[i] = makeDNDQ(u, cond, n, pModel);
    else if (inN) repl[i] = makeDN(u, cond, n);
    else if (inP) repl[i] = makeDQ(u, cond, pModel);
  }
  q = lowerCoordinates(u, q, repl);
  q.a = std::move(b);
  q.normalize(u);
  return q;
}

std::vector<ModelId> simpleCountables(const Universe& u) {
  std::vector<ModelId> out;
  for (const auto& [id, m] : u.countables)
    if (m.simple) out.push_back(id);
  return out;
}

std::vector<ModelId> simpleUncountables(const Universe& u) {
  std::vector<ModelId> out;
  for (const auto& [id, p] : u.uncountables)
    if (p.simple) out.push_back(id);
  return out;
}

Universe trialUniverse(SplitMix64& rng, const GenParams& params) {
  // Trials quantify over generated and fixture universes alike.
  uint64_t roll = rng.below(16);
  if (roll == 0) return fixtures::u1();
  if (roll == 1) return fixtures::u2();
  return generateUniverse(rng.next(), params);
}

}  // namespace scf::harness
