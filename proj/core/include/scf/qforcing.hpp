#pragma once

#include "scf/pforcing.hpp"

namespace scf {

/// A condition of the side-condition product: one single-forcing condition
/// per touched coordinate plus a joint adequate side-condition set.
struct QCondition {
  std::map<uint32_t, PCondition> fBig;
  std::set<ModelId> a;

  bool isMax() const { return fBig.empty() && a.empty(); }
  OrdVec indexDomain() const {
    OrdVec out;
    for (const auto& [i, _] : fBig) out.push_back(i);
    return out;
  }

  void normalize(const Universe& u) {
    for (auto& [i, p] : fBig) p.normalize(u);
  }

  friend bool operator==(const QCondition&, const QCondition&) = default;
};

/// Checks the four defining clauses (Q1 adequacy, Q2 finite index domain,
/// Q3 per-coordinate conditions over the right S_i containing the indexed
/// side-condition models, Q4 the s* domain obligation). Coordinate-internal
/// violations are reported as Q3 with the coordinate and inner clause.
std::vector<ClauseViolation> validateQ(const Universe& u, const QCondition& p);

inline bool isConditionQ(const Universe& u, const QCondition& p) {
  return validateQ(u, p).empty();
}

bool leqQ(const Universe& u, const QCondition& q, const QCondition& p);
std::vector<ClauseViolation> leqExplainQ(const Universe& u, const QCondition& q,
                                         const QCondition& p);

/// p ⊎ x: opens the fresh coordinates of x with empty conditions carrying the
/// indexed part of the side conditions. Below p, and every q <= p whose index
/// domain covers x is below it.
QCondition uplus(const Universe& u, const QCondition& p, const OrdVec& x);

/// Replaces coordinates by stronger ones; the index domain and side
/// conditions are unchanged.
QCondition lowerCoordinates(const Universe& u, const QCondition& p,
                            const std::map<uint32_t, PCondition>& repl);

/// The product analogue of the dense classes: D(N) for countable N, D(P) for
/// uncountable P, with per-coordinate membership in D_{i,N} / D_{i,P}.
bool inDNQ(const Universe& u, const QCondition& p, const ModelId& n);
bool inDPQ(const Universe& u, const QCondition& p, const ModelId& pModel);
bool inDClassQ(const Universe& u, const QCondition& p, const ModelRef& m);

/// Component-wise containment of a product condition in a model.
bool qconditionInModel(const Universe& u, const QCondition& p, const ModelRef& m);

/// q restricted to a (simple) model of either kind: side conditions and index
/// domain intersected with the model, coordinates restricted coordinate-wise.
QCondition restrictQ(const Universe& u, const QCondition& q, const ModelRef& m);

struct OplusQResult {
  QCondition cond;
  bool normalized = false;  // true when a ⊎-step was needed first
  OrdVec addedIndices;
};

/// w ⊕^N q for m simple, q ∈ D(m), w ∈ m ∩ Q, w <= q|m. When the index
/// domain of w is not contained in that of q, q is first widened by ⊎ with
/// the missing indices (recorded in the result).
OplusQResult oplusQ(const Universe& u, const QCondition& w, const QCondition& q,
                    const ModelRef& m, Counters* counters = nullptr);

/// The coordinate projection: F_q(i), or the maximum single-forcing condition
/// when q is the maximum product condition.
/// Throws CoordinateMissing when i is not in the index domain.
PCondition projectCoordinate(const Universe& u, const QCondition& q, uint32_t i);

}  // namespace scf
