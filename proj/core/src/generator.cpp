#include "scf/generator.hpp"

#include "scf/adequacy.hpp"

namespace scf {

namespace {

std::vector<Ord> allCuts(const Universe& u) {
  std::vector<Ord> cuts;
  for (uint32_t lam : u.config.lambdaSet) cuts.push_back(Ord::fin(lam));
  cuts.push_back(Ord::kappa());
  return cuts;
}

}  // namespace

std::vector<std::string> scanUniverseDefects(const Universe& u) {
  std::vector<std::string> out;
  auto cuts = allCuts(u);

  // Sup separation: a given set of N strictly below a cut trace of N in sup.
  for (const auto& [ni, n] : u.countables) {
    for (Ord alpha : cuts) {
      TraceSet t = n.trace.restrictBelow(alpha);
      if (t.empty()) continue;
      for (const auto& k : n.setFamily) {
        if (!alpha.isKappa() && !(k.sup() < alpha.finite() || k.subsetOf(t))) continue;
        if (!k.subsetOf(t)) continue;
        if (k != t && k.sup() == t.sup())
          out.push_back("sup collision: " + k.str() + " vs " + ni + " ∩ " + alpha.str());
      }
    }
  }

  // Representation independence: every representation of a cut trace yields
  // the same hull facts.
  std::map<TraceSet, std::vector<std::pair<ModelId, Ord>>> byValue;
  for (const auto& [mi, m] : u.countables) {
    for (Ord alpha : cuts) {
      TraceSet t = m.trace.restrictBelow(alpha);
      if (!t.empty()) byValue[t].emplace_back(mi, alpha);
    }
  }
  for (const auto& [t, reps] : byValue) {
    if (reps.size() < 2) continue;
    std::set<TraceSet> pool;
    for (const auto& [mi, alpha] : reps) {
      const auto& fam = u.countable(mi).setFamily;
      pool.insert(fam.begin(), fam.end());
    }
    for (const auto& k : pool) {
      int verdict = -1;
      for (const auto& [mi, alpha] : reps) {
        bool in = memSet(u, k, u.countable(mi)) &&
                  (alpha.isKappa() || k.sup() < alpha.finite());
        if (verdict == -1) verdict = in ? 1 : 0;
        if (verdict != (in ? 1 : 0)) {
          out.push_back("representation disagreement on " + t.str() + " at " + k.str());
          verdict = -2;
          break;
        }
      }
      if (verdict == -2) break;
    }
  }

  // Hull transitivity: a cut trace of N inside M1 drags N's smaller given
  // sets into M1.
  for (const auto& [ni, n] : u.countables) {
    for (const auto& [mi, m1] : u.countables) {
      if (ni == mi) continue;
      for (Ord alpha : cuts) {
        TraceSet t = n.trace.restrictBelow(alpha);
        if (t.empty() || !memSet(u, t, m1)) continue;
        for (const auto& k : n.setFamily) {
          if (!alpha.isKappa() && !(k.empty() || k.sup() < alpha.finite())) continue;
          if (!memSet(u, k, m1)) {
            out.push_back("hull transitivity: " + k.str() + " ∈ " + ni + ", " + ni + " ∩ " +
                          alpha.str() + " ∈ " + mi + ", but " + k.str() + " ∉ " + mi);
          }
        }
      }
    }
  }
  return out;
}

namespace {

struct Builder {
  const GenParams& prm;
  SplitMix64 rng;
  Universe u;
  uint32_t lamMax = 0;
  std::set<uint32_t> forbidden;  // banded ordinals below low cuts
  OrdVec lowCuts;
  uint32_t nextId = 0;

  explicit Builder(const GenParams& p, uint64_t seed) : prm(p), rng(seed) {}

  uint32_t pick(uint32_t lo, uint32_t hi) {  // inclusive bounds
    return lo + static_cast<uint32_t>(rng.below(hi - lo + 1));
  }

  ModelId freshId() { return "m" + std::to_string(nextId++); }

  bool buildConfig() {
    u.config.size = pick(prm.minSize, prm.maxSize);
    u.config.omega1Cut = pick(prm.minCut, prm.maxCut);
    if (u.config.omega1Cut + 14 > u.config.size) u.config.size = u.config.omega1Cut + 14;

    uint32_t k = pick(prm.minLambda, prm.maxLambda);
    std::set<uint32_t> lams;
    uint32_t lo = u.config.omega1Cut + 1, hi = u.config.size - 2;
    for (uint32_t tries = 0; lams.size() < k && tries < 8 * k; ++tries)
      lams.insert(pick(lo, hi));
    if (lams.size() < 3) return false;
    u.config.lambdaSet.assign(lams.begin(), lams.end());
    lamMax = u.config.lambdaSet.back();

    u.config.lambdaStar = pick(prm.minLambdaStar, prm.maxLambdaStar);
    u.config.stationaryFamily.assign(u.config.lambdaStar, {});
    // Keep at least one Lambda element out of every S_i so that uncountable
    // cuts avoiding the stationary sets exist.
    size_t reserved = rng.below(u.config.lambdaSet.size());
    std::set<uint32_t> inS;
    for (size_t j = 0; j < u.config.lambdaSet.size(); ++j) {
      if (j == reserved) continue;
      if (!rng.chance(55, 100)) continue;
      uint32_t i = static_cast<uint32_t>(rng.below(u.config.lambdaStar));
      u.config.stationaryFamily[i].push_back(u.config.lambdaSet[j]);
      inS.insert(u.config.lambdaSet[j]);
    }
    for (auto& s : u.config.stationaryFamily) s = ords::normalized(s);
    if (inS.empty()) {
      // Force one stationary ordinal so conditions have something to do.
      uint32_t j = reserved == 0 ? 1 : 0;
      u.config.stationaryFamily[0].push_back(u.config.lambdaSet[j]);
      u.config.stationaryFamily[0] = ords::normalized(u.config.stationaryFamily[0]);
      inS.insert(u.config.lambdaSet[j]);
    }
    return true;
  }

  bool chooseCuts(std::vector<std::pair<uint32_t, bool>>& cutsOut) {
    uint32_t lo = std::min(prm.minUncountables, prm.maxUncountables);
    uint32_t nUnc = lo + static_cast<uint32_t>(rng.below(prm.maxUncountables - lo + 1));
    OrdVec unionS = u.unionStationary();
    std::set<uint32_t> used;
    for (uint32_t c = 0; c < nUnc; ++c) {
      bool low = rng.chance(prm.lowCutPct, 100);
      if (low) {
        // Low cuts are Lambda elements outside every S_i with a Lambda
        // predecessor; the band below them is kept trace-free so that
        // truncations sit under a comparison-point gap.
        std::vector<size_t> candidates;
        for (size_t j = 1; j + 1 < u.config.lambdaSet.size(); ++j) {
          uint32_t lam = u.config.lambdaSet[j];
          if (!ords::contains(unionS, lam) && !used.count(lam)) candidates.push_back(j);
        }
        if (candidates.empty()) continue;
        size_t j = candidates[rng.below(candidates.size())];
        uint32_t cut = u.config.lambdaSet[j], prev = u.config.lambdaSet[j - 1];
        for (uint32_t x = prev; x < cut; ++x) forbidden.insert(x);
        lowCuts.push_back(cut);
        used.insert(cut);
        cutsOut.emplace_back(cut, true);
      } else {
        uint32_t cut = u.config.size - 1;
        if (cut <= lamMax || used.count(cut)) continue;
        used.insert(cut);
        cutsOut.emplace_back(cut, false);
      }
    }
    if (cutsOut.size() < prm.minUncountables) {
      uint32_t cut = u.config.size - 1;
      if (cut > lamMax && !used.count(cut)) cutsOut.emplace_back(cut, false);
    }
    lowCuts = ords::normalized(lowCuts);
    return cutsOut.size() >= prm.minUncountables;
  }

  OrdVec elementPool() const {
    OrdVec pool;
    for (uint32_t x = u.config.omega1Cut; x < lamMax; ++x) {
      if (!forbidden.count(x)) pool.push_back(x);
    }
    return pool;
  }

  void addModel(TraceSet trace, std::set<uint32_t> idx) {
    if (trace.empty()) return;
    for (const auto& [id, m] : u.countables) {
      if (m.trace == trace && m.indexSet == idx) return;
    }
    CountableModel m;
    m.id = freshId();
    m.trace = std::move(trace);
    m.indexSet = std::move(idx);
    u.countables[m.id] = std::move(m);
  }

  std::set<uint32_t> fullIdx() const {
    std::set<uint32_t> out;
    for (uint32_t i = 0; i < u.config.lambdaStar; ++i) out.insert(i);
    return out;
  }

  bool buildCountables() {
    // Traces are laid out in the windows between Lambda elements. Nested
    // models take cumulative prefixes of a per-window ladder, so a containing
    // model strictly dominates each member inside every window it shares;
    // this keeps cut traces sup-separated.
    const OrdVec& lams = u.config.lambdaSet;
    std::vector<std::pair<uint32_t, uint32_t>> wins;
    uint32_t lo = u.config.omega1Cut;
    for (uint32_t lam : lams) {
      wins.push_back({lo, lam});
      lo = lam;
    }

    uint32_t spineMax = std::min<uint32_t>(3, std::max<uint32_t>(2, prm.maxCountables - 1));
    uint32_t spine = pick(2, spineMax);
    std::set<uint32_t> deltas;
    for (uint32_t tries = 0; deltas.size() < spine && tries < 12; ++tries)
      deltas.insert(pick(1, u.config.omega1Cut - 1));
    if (deltas.size() < 2) return false;
    OrdVec deltaList(deltas.begin(), deltas.end());
    spine = static_cast<uint32_t>(deltaList.size());

    std::set<uint32_t> used;
    std::vector<OrdVec> ladder(wins.size());
    uint32_t occupied = 0;
    for (size_t k = 0; k < wins.size(); ++k) {
      OrdVec pool;
      for (uint32_t v = wins[k].first; v < wins[k].second; ++v)
        if (!forbidden.count(v) && !ords::contains(lowCuts, v)) pool.push_back(v);
      if (pool.size() < spine || !rng.chance(75, 100)) continue;
      std::set<uint32_t> chosen;
      // Seed the ladder with the window's Lambda boundary so stationary
      // ordinals actually occur inside traces.
      if (k > 0 && pool.front() == wins[k].first && rng.chance(70, 100))
        chosen.insert(pool.front());
      for (uint32_t tries = 0; chosen.size() < spine && tries < 6 * spine; ++tries)
        chosen.insert(pool[rng.below(pool.size())]);
      if (chosen.size() < spine) continue;
      ladder[k].assign(chosen.begin(), chosen.end());
      used.insert(chosen.begin(), chosen.end());
      ++occupied;
    }
    if (occupied == 0) return false;

    std::vector<TraceSet> spines;
    for (uint32_t j = 0; j < spine; ++j) {
      OrdVec elems;
      for (uint32_t d = 0; d < deltaList[j]; ++d) elems.push_back(d);
      for (size_t k = 0; k < wins.size(); ++k)
        for (uint32_t i = 0; i <= j && i < ladder[k].size(); ++i)
          elems.push_back(ladder[k][i]);
      if (j + 1 == spine) {
        // The host learns every low cut so uncountable cuts live inside it.
        for (uint32_t c : lowCuts) elems.push_back(c);
      }
      spines.push_back(TraceSet(ords::normalized(elems)));
      addModel(spines.back(), fullIdx());
    }
    if (u.countables.size() < prm.maxCountables && rng.chance(prm.siblingPct, 100)) {
      // The sibling branches off any spine model, not just the host; middle
      // siblings overlap the host only up to the branch point, which is what
      // drives the deeper amalgam cases.
      const TraceSet& base = spines[rng.below(spines.size())];
      uint32_t lamK = lams[rng.below(lams.size())];
      OrdVec tail;
      for (size_t k = 0; k < wins.size(); ++k) {
        if (wins[k].first < lamK) continue;
        for (uint32_t v = wins[k].first; v < wins[k].second; ++v) {
          // The branch ordinal itself stays out so the sibling genuinely
          // leaves the base model at lamK.
          if (v == lamK && !rng.chance(1, 4)) continue;
          if (forbidden.count(v) || used.count(v) || ords::contains(lowCuts, v)) continue;
          if (tail.empty() || rng.chance(1, 3)) tail.push_back(v);
          if (tail.size() >= 2) break;
        }
        if (!tail.empty()) break;
      }
      tail = ords::normalized(tail);
      for (uint32_t v : tail) used.insert(v);
      TraceSet prefix = base.restrictBelow(Ord::fin(lamK));
      if (!tail.empty() && !prefix.empty()) {
        std::set<uint32_t> idx = fullIdx();
        if (u.config.lambdaStar >= 2 && rng.chance(prm.dropIndexPct, 100))
          idx.erase(static_cast<uint32_t>(rng.below(u.config.lambdaStar)));
        addModel(TraceSet(ords::unite(prefix.elems(), tail)), idx);
        for (const auto& s : spines) addModel(s.restrictBelow(Ord::fin(lamK)), fullIdx());
      }
    }
    return true;
  }

  void addUncountables(const std::vector<std::pair<uint32_t, bool>>& cuts) {
    for (const auto& [cut, low] : cuts) {
      UncountableModel p;
      p.id = "P" + std::to_string(u.uncountables.size());
      p.cut = cut;
      p.indexSet = fullIdx();
      u.uncountables[p.id] = std::move(p);
      // Truncations of every countable at the cut.
      std::vector<std::pair<TraceSet, std::set<uint32_t>>> toAdd;
      for (const auto& [id, m] : u.countables)
        toAdd.emplace_back(m.trace.restrictBelow(Ord::fin(cut)), m.indexSet);
      for (auto& [t, idx] : toAdd) addModel(std::move(t), std::move(idx));
    }
  }

  void computeFamilies() {
    for (auto& [ni, n] : u.countables) {
      n.modelFamily.clear();
      for (const auto& [mi, m] : u.countables) {
        if (mi == ni) continue;
        if (!m.trace.subsetOf(n.trace) || m.delta() >= n.delta()) continue;
        if (!std::includes(n.indexSet.begin(), n.indexSet.end(), m.indexSet.begin(),
                           m.indexSet.end()))
          continue;
        n.modelFamily.insert(mi);
      }
    }
    for (auto& [pi, p] : u.uncountables) {
      p.modelFamily.clear();
      for (const auto& [mi, m] : u.countables) {
        if (m.trace.sup() >= p.cut) continue;
        bool safe = true;
        for (const auto& [ki, km] : u.countables) {
          try {
            if (beta(u, km, m).finite() >= p.cut) safe = false;
          } catch (const Error&) {
            safe = false;
          }
          if (!safe) break;
        }
        if (safe) p.modelFamily.insert(mi);
      }
    }
  }

  void closeSetFamilies() {
    auto cuts = allCuts(u);
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto& [ni, n] : u.countables) {
        // Members contribute their cut traces.
        for (const auto& mi : n.modelFamily) {
          const auto& m = u.countables.at(mi);
          for (Ord alpha : cuts) {
            TraceSet t = m.trace.restrictBelow(alpha);
            if (!t.empty() && n.setFamily.insert(t).second) changed = true;
          }
        }
        // Initial-segment closure.
        std::vector<TraceSet> prefixes;
        for (const auto& k : n.setFamily)
          for (size_t len = 1; len < k.size(); ++len) prefixes.push_back(k.prefix(len));
        for (auto& pfx : prefixes)
          if (n.setFamily.insert(pfx).second) changed = true;
      }
      // Transitivity and representation independence across models.
      std::map<TraceSet, std::vector<std::pair<ModelId, Ord>>> byValue;
      for (const auto& [mi, m] : u.countables)
        for (Ord alpha : cuts) {
          TraceSet t = m.trace.restrictBelow(alpha);
          if (!t.empty()) byValue[t].emplace_back(mi, alpha);
        }
      for (const auto& [t, reps] : byValue) {
        // Which models contain t as a given set?
        std::vector<ModelId> holders;
        for (const auto& [mi, m] : u.countables)
          if (m.setFamily.count(t)) holders.push_back(mi);
        if (holders.empty()) continue;
        std::set<TraceSet> below;
        for (const auto& [mi, alpha] : reps) {
          for (const auto& k : u.countables.at(mi).setFamily) {
            if (alpha.isKappa() || k.sup() < alpha.finite()) below.insert(k);
          }
        }
        for (const auto& hi : holders) {
          auto& fam = u.countables.at(hi).setFamily;
          for (const auto& k : below)
            if (k.subsetOf(t) && fam.insert(k).second) changed = true;
        }
        // Representation independence between the rep models themselves.
        for (const auto& [mi, alpha] : reps) {
          auto& fam = u.countables.at(mi).setFamily;
          for (const auto& k : below)
            if (k.subsetOf(t) && k != t && fam.insert(k).second) changed = true;
        }
      }
    }
  }

  bool addMissingIntersections() {
    bool added = false;
    std::vector<std::pair<TraceSet, std::set<uint32_t>>> toAdd;
    for (const auto& [mi, m] : u.countables) {
      for (const auto& [ni, n] : u.countables) {
        ModelRel r;
        try {
          r = compare(u, m, n);
        } catch (const Error&) {
          continue;
        }
        if (r == ModelRel::Incomparable) continue;
        TraceSet t = m.trace.intersect(n.trace);
        std::set<uint32_t> idx;
        for (uint32_t i : m.indexSet)
          if (n.indexSet.count(i)) idx.insert(i);
        bool found = false;
        for (const auto& [oi, o] : u.countables)
          found |= (o.trace == t && o.indexSet == idx);
        if (!found) toAdd.emplace_back(t, idx);
      }
      for (const auto& [pi, p] : u.uncountables) {
        TraceSet t = m.trace.restrictBelow(Ord::fin(p.cut));
        std::set<uint32_t> idx;
        for (uint32_t i : m.indexSet)
          if (p.indexSet.count(i)) idx.insert(i);
        bool found = false;
        for (const auto& [oi, o] : u.countables)
          found |= (o.trace == t && o.indexSet == idx);
        if (!found) toAdd.emplace_back(t, idx);
      }
    }
    for (auto& [t, idx] : toAdd) {
      size_t before = u.countables.size();
      addModel(t, idx);
      added |= (u.countables.size() != before);
    }
    return added;
  }

  void assignSimpleFlags() {
    for (auto& [ni, n] : u.countables) {
      bool ok = true;
      for (const auto& [mi, m] : u.countables) {
        ModelRel r;
        try {
          r = compare(u, m, n);
        } catch (const Error&) {
          ok = false;
          break;
        }
        if (r != ModelRel::Less) continue;
        try {
          if (!n.modelFamily.count(intersectCountable(u, m, n).id)) ok = false;
        } catch (const Error&) {
          ok = false;
        }
        if (!ok) break;
      }
      n.simple = ok;
    }
    for (auto& [pi, p] : u.uncountables) {
      bool ok = true;
      for (const auto& [mi, m] : u.countables) {
        try {
          if (!p.modelFamily.count(intersectWithUncountable(u, m, p).id)) ok = false;
        } catch (const Error&) {
          ok = false;
        }
        if (!ok) break;
      }
      p.simple = ok;
    }
  }

  bool build() {
    if (!buildConfig()) return false;
    std::vector<std::pair<uint32_t, bool>> cuts;
    if (!chooseCuts(cuts)) return false;
    if (!buildCountables()) return false;
    addUncountables(cuts);

    for (int round = 0; round < 6; ++round) {
      computeFamilies();
      closeSetFamilies();
      if (!addMissingIntersections()) break;
      if (round == 5) return false;  // did not stabilize
      if (u.countables.size() > 30) return false;
    }
    if (u.countables.size() < prm.minCountables) return false;
    computeFamilies();
    closeSetFamilies();
    assignSimpleFlags();
    return true;
  }
};

}  // namespace

Universe generateUniverse(uint64_t seed, const GenParams& params, GenStats* stats) {
  GenStats local;
  GenStats& st = stats ? *stats : local;
  SplitMix64 seeder(seed);
  for (uint32_t attempt = 0; attempt < params.attemptBudget; ++attempt) {
    ++st.attempts;
    Builder b(params, seeder.next());
    if (!b.build()) {
      ++st.rejectionsByAxiom["build"];
      continue;
    }
    AxiomReport rep = validateUniverse(b.u);
    if (!rep.allPassed()) {
      for (const auto& e : rep.entries) {
        if (!e.passed) {
          ++st.rejectionsByAxiom[e.axiom];
          break;
        }
      }
      continue;
    }
    if (!scanUniverseDefects(b.u).empty()) {
      ++st.defectRejections;
      continue;
    }
    return b.u;
  }
  fail(Errc::GenerationExhausted,
       "no valid universe within " + std::to_string(params.attemptBudget) + " attempts");
}

}  // namespace scf
