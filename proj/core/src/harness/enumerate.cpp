#include "scf/harness/enumerate.hpp"

namespace scf::harness {

namespace {

struct Enumerator {
  const Universe& u;
  StationaryRef ref;
  const EnumBounds& bounds;
  const std::function<bool(const PCondition&)>& sink;
  OrdVec sset;
  uint64_t spent = 0;
  bool stopped = false;

  void charge() {
    if (++spent > bounds.budget) fail(Errc::BudgetExceeded, "condition enumeration budget");
  }

  void run() {
    std::vector<ModelId> ids;
    for (const auto& [id, _] : u.countables) ids.push_back(id);
    size_t n = std::min<size_t>(ids.size(), 20);
    for (uint64_t mask = 0; mask < (1ull << n) && !stopped; ++mask) {
      std::set<ModelId> a;
      for (size_t i = 0; i < n; ++i)
        if (mask & (1ull << i)) a.insert(ids[i]);
      if (a.size() > bounds.maxA) continue;
      if (!isAdequate(u, a)) continue;
      enumerateDomains(a);
    }
  }

  void enumerateDomains(const std::set<ModelId>& a) {
    // Candidate pool: stationary ordinals plus cut traces of the chosen
    // side-condition models.
    std::vector<uint32_t> ordCands = sset;
    std::vector<TraceSet> setCands;
    std::vector<Ord> cuts;
    for (uint32_t lam : sset) cuts.push_back(Ord::fin(lam));
    cuts.push_back(Ord::kappa());
    for (const auto& mId : a) {
      const auto& m = u.countable(mId);
      for (Ord alpha : cuts) {
        TraceSet t = m.trace.restrictBelow(alpha);
        if (t.empty()) continue;
        if (std::find(setCands.begin(), setCands.end(), t) == setCands.end())
          setCands.push_back(t);
      }
    }
    std::sort(setCands.begin(), setCands.end());

    OrdVec obligations = ords::intersect(rStar(u, a), sset);

    size_t no = ordCands.size(), ns = setCands.size();
    if (no > 16 || ns > 16) fail(Errc::BudgetExceeded, "candidate pool too large");
    for (uint64_t om = 0; om < (1ull << no) && !stopped; ++om) {
      OrdVec doms;
      for (size_t i = 0; i < no; ++i)
        if (om & (1ull << i)) doms.push_back(ordCands[i]);
      if (doms.size() > bounds.maxDom) continue;
      if (!ords::subset(obligations, doms)) continue;  // C7 cannot hold otherwise
      for (uint64_t sm = 0; sm < (1ull << ns) && !stopped; ++sm) {
        std::vector<TraceSet> sets;
        for (size_t i = 0; i < ns; ++i)
          if (sm & (1ull << i)) sets.push_back(setCands[i]);
        if (doms.size() + sets.size() > bounds.maxDom) continue;
        enumerateChains(a, doms, sets);
      }
    }
  }

  void enumerateChains(const std::set<ModelId>& a, const OrdVec& doms,
                       const std::vector<TraceSet>& sets) {
    std::vector<DomainElement> elems;
    for (uint32_t alpha : doms) elems.push_back(DomainElement::ordS(alpha));
    for (const auto& t : sets) elems.push_back(DomainElement::setElem(t));
    size_t ne = elems.size(), nsets = sets.size();
    if (nsets > 10) fail(Errc::BudgetExceeded, "too many set elements");

    std::vector<uint64_t> chainMask(ne, 0);
    while (true) {
      charge();
      PCondition p;
      p.s = ref;
      p.a = a;
      bool shaped = true;
      for (size_t i = 0; i < ne && shaped; ++i) {
        Chain c;
        for (size_t j = 0; j < nsets; ++j)
          if (chainMask[i] & (1ull << j)) c.push_back(sets[j]);
        std::sort(c.begin(), c.end(), chainLess);
        for (size_t k = 0; k + 1 < c.size(); ++k)
          if (c[k].sup() >= c[k + 1].sup()) shaped = false;
        p.f[elems[i]] = std::move(c);
      }
      if (shaped) {
        p.normalize(u);
        if (validateP(u, p).empty()) {
          enumerateG(p);
        }
      }
      // Odometer over the chain masks.
      size_t pos = 0;
      while (pos < ne) {
        if (++chainMask[pos] < (1ull << nsets)) break;
        chainMask[pos] = 0;
        ++pos;
      }
      if (pos == ne || stopped) break;
    }
  }

  void enumerateG(const PCondition& base) {
    struct Slot {
      GKey key;
      OrdVec window;
    };
    std::vector<Slot> slots;
    for (const auto& [x, chain] : base.f) {
      for (const TraceSet& k : chain) {
        OrdVec window;
        if (x.isOrd()) {
          for (uint32_t v = k.sup(); v < x.alpha(); ++v) window.push_back(v);
        } else {
          for (uint32_t v : x.set().elems())
            if (v >= k.sup()) window.push_back(v);
        }
        slots.push_back(Slot{GKey{k, x}, std::move(window)});
      }
    }
    // Per-slot options: all subsets of the window of size <= maxGSize,
    // ordered by size then value.
    std::vector<std::vector<OrdVec>> options(slots.size());
    for (size_t i = 0; i < slots.size(); ++i) {
      options[i].push_back({});
      if (bounds.maxGSize >= 1) {
        for (uint32_t v : slots[i].window) options[i].push_back({v});
      }
      if (bounds.maxGSize >= 2) {
        for (size_t x1 = 0; x1 < slots[i].window.size(); ++x1)
          for (size_t x2 = x1 + 1; x2 < slots[i].window.size(); ++x2)
            options[i].push_back({slots[i].window[x1], slots[i].window[x2]});
      }
    }
    std::vector<size_t> pick(slots.size(), 0);
    while (true) {
      charge();
      PCondition p = base;
      for (size_t i = 0; i < slots.size(); ++i) {
        if (!options[i][pick[i]].empty()) p.g[slots[i].key] = options[i][pick[i]];
      }
      p.normalize(u);
      if (validateP(u, p).empty()) {
        if (!sink(p)) {
          stopped = true;
          return;
        }
      }
      size_t pos = 0;
      while (pos < slots.size()) {
        if (++pick[pos] < options[pos].size()) break;
        pick[pos] = 0;
        ++pos;
      }
      if (pos == slots.size()) break;
    }
  }
};

}  // namespace

void enumerateConditions(const Universe& u, StationaryRef ref, const EnumBounds& bounds,
                         const std::function<bool(const PCondition&)>& sink) {
  Enumerator e{u, ref, bounds, sink, stationarySet(u, ref)};
  e.run();
}

uint64_t countConditions(const Universe& u, StationaryRef ref, const EnumBounds& bounds) {
  uint64_t n = 0;
  enumerateConditions(u, ref, bounds, [&n](const PCondition&) {
    ++n;
    return true;
  });
  return n;
}

}  // namespace scf::harness
