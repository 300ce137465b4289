#include "scf/harness/shrink.hpp"

namespace scf::harness {

namespace {

void dropModelFromP(PCondition& p, const ModelId& id) { p.a.erase(id); }

void dropModelFromBundle(Bundle& b, const ModelId& id, bool countable) {
  if (countable) {
    b.u.countables.erase(id);
    for (auto& [_, m] : b.u.countables) m.modelFamily.erase(id);
    for (auto& [_, p] : b.u.uncountables) p.modelFamily.erase(id);
    for (auto& [_, c] : b.pconds) dropModelFromP(c, id);
    for (auto& [_, q] : b.qconds) {
      q.a.erase(id);
      for (auto& [i, c] : q.fBig) dropModelFromP(c, id);
    }
    for (auto& [_, ids] : b.idsets)
      ids.erase(std::remove(ids.begin(), ids.end(), id), ids.end());
  } else {
    b.u.uncountables.erase(id);
  }
}

void dropDomainElement(PCondition& p, const DomainElement& x) {
  p.f.erase(x);
  if (!x.isOrd()) {
    for (auto& [_, chain] : p.f)
      chain.erase(std::remove(chain.begin(), chain.end(), x.set()), chain.end());
  }
  for (auto it = p.g.begin(); it != p.g.end();) {
    bool hit = it->first.x == x || (!x.isOrd() && it->first.k == x.set());
    it = hit ? p.g.erase(it) : std::next(it);
  }
}

/// All single-deletion neighbours, in a deterministic order.
std::vector<Bundle> neighbours(const Bundle& b) {
  std::vector<Bundle> out;
  for (const auto& [id, _] : b.u.countables) {
    Bundle nb = b;
    dropModelFromBundle(nb, id, true);
    out.push_back(std::move(nb));
  }
  for (const auto& [id, _] : b.u.uncountables) {
    Bundle nb = b;
    dropModelFromBundle(nb, id, false);
    out.push_back(std::move(nb));
  }
  for (const auto& [name, cond] : b.pconds) {
    for (const auto& [x, _] : cond.f) {
      Bundle nb = b;
      dropDomainElement(nb.pconds[name], x);
      out.push_back(std::move(nb));
    }
    for (const auto& [key, val] : cond.g) {
      for (uint32_t v : val) {
        Bundle nb = b;
        OrdVec& slot = nb.pconds[name].g[key];
        slot = ords::diff(slot, OrdVec{v});
        if (slot.empty()) nb.pconds[name].g.erase(key);
        out.push_back(std::move(nb));
      }
    }
  }
  for (const auto& [name, cond] : b.qconds) {
    for (const auto& [i, inner] : cond.fBig) {
      {
        Bundle nb = b;
        nb.qconds[name].fBig.erase(i);
        out.push_back(std::move(nb));
      }
      for (const auto& [x, _] : inner.f) {
        Bundle nb = b;
        dropDomainElement(nb.qconds[name].fBig[i], x);
        out.push_back(std::move(nb));
      }
      for (const auto& [key, val] : inner.g) {
        for (uint32_t v : val) {
          Bundle nb = b;
          OrdVec& slot = nb.qconds[name].fBig[i].g[key];
          slot = ords::diff(slot, OrdVec{v});
          if (slot.empty()) nb.qconds[name].fBig[i].g.erase(key);
          out.push_back(std::move(nb));
        }
      }
    }
  }
  for (const auto& [name, ids] : b.idsets) {
    for (const auto& id : ids) {
      Bundle nb = b;
      auto& v = nb.idsets[name];
      v.erase(std::remove(v.begin(), v.end(), id), v.end());
      out.push_back(std::move(nb));
    }
  }
  return out;
}

}  // namespace

Bundle shrinkCounterexample(const Bundle& ce,
                            const std::function<bool(const Bundle&)>& stillFails) {
  Bundle cur = ce;
  bool improved = true;
  while (improved) {
    improved = false;
    for (Bundle& nb : neighbours(cur)) {
      if (stillFails(nb)) {
        cur = std::move(nb);
        improved = true;
        break;
      }
    }
  }
  return cur;
}

}  // namespace scf::harness
