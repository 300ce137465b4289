#pragma once

#include "scf/pcondition.hpp"

namespace scf {

/// Checks the seven defining clauses. Empty result means p is a condition.
/// Violations are reported in clause order with lexicographic witnesses.
/// Throws UnknownId for dangling model ids.
std::vector<ClauseViolation> validateP(const Universe& u, const PCondition& p);

inline bool isConditionP(const Universe& u, const PCondition& p) {
  return validateP(u, p).empty();
}

/// q <= p in the forcing order (clauses (a)-(d)).
bool leqP(const Universe& u, const PCondition& q, const PCondition& p);

/// Like leqP but reports every violated order clause.
std::vector<ClauseViolation> leqExplainP(const Universe& u, const PCondition& q,
                                         const PCondition& p);

/// p + x: adjoins fresh S-ordinals together with the traces M ∩ alpha of the
/// side-condition models, with empty new g values. Output is a condition
/// below p. Throws DomainClash when x meets the domain.
PCondition extendOrdinals(const Universe& u, const PCondition& p, const OrdVec& x);

/// Replaces g by its coherent saturation: g(K,y) collects g(K,x) over all x
/// with x = y or (K ∈ f(x) and x ∈ f(y)). f and A are unchanged; the output
/// is below p and satisfies g(K,x) ⊆ g(K,y) whenever K ∈ f(x), x ∈ f(y).
PCondition saturateG(const Universe& u, const PCondition& p);

/// For p ∈ N, the canonical extension with N adjoined to the side conditions
/// and N ∩ alpha spliced into every S-ordinal chain.
/// Throws NotInModel when p is not contained in N component-wise.
PCondition adjoinModel(const Universe& u, const PCondition& p, const ModelId& n);

/// Extends q below so that its side conditions are closed under M ∩ N for
/// M < N. Requires N ∈ A_q.
PCondition closeUnderN(const Universe& u, const PCondition& q, const ModelId& n);

/// Extends q below so that its side conditions are closed under M ∩ Q.
PCondition closeUnderQ(const Universe& u, const PCondition& q, const ModelId& qModel);

/// Membership in the dense class D_N: N ∈ A_r, side conditions closed under
/// intersection with N, and g coherently saturated.
bool inDN(const Universe& u, const PCondition& r, const ModelId& n);

/// Membership in the dense class D_Q: side conditions closed under ∩ Q.
bool inDQ(const Universe& u, const PCondition& q, const ModelId& qModel);

/// Component-wise containment of a condition in a countable model:
/// side-condition models via modelFamily, ordinals via the trace, trace sets
/// via setFamily, g ordinals via the trace.
bool conditionInCountable(const Universe& u, const PCondition& p, const ModelId& n);

/// Component-wise containment in an uncountable model: everything below cut.
bool conditionInUncountable(const Universe& u, const PCondition& p, const ModelId& qModel);

/// q restricted to an uncountable model: domain cut at Q, chains copied
/// whole. Requires q ∈ D_Q and Q simple; throws NotInDClass otherwise.
PCondition restrictToUncountable(const Universe& u, const PCondition& q, const ModelId& qModel);

/// r restricted to a countable model: domain cut at N and chains intersected
/// with N. Requires r ∈ D_N and N simple.
PCondition restrictToCountable(const Universe& u, const PCondition& r, const ModelId& n);

/// Amalgam over an uncountable model: the canonical lower bound of w and q
/// for Q simple, q ∈ D_Q, w ∈ Q ∩ P, w <= q|Q.
/// Throws PreconditionFailed naming the failed hypothesis.
PCondition amalgUncountable(const Universe& u, const PCondition& w, const PCondition& q,
                            const ModelId& qModel, Counters* counters = nullptr);

/// Amalgam over a countable model: the canonical lower bound of w and r for
/// N simple, r ∈ D_N, w ∈ N ∩ P, w <= r|N. The domain may grow by traces
/// M ∩ alpha for side-condition models M with N <= M.
/// Throws AmbiguousCase if the value case analysis is not a partition
/// (impossible on valid inputs).
PCondition amalgCountable(const Universe& u, const PCondition& w, const PCondition& r,
                          const ModelId& n, Counters* counters = nullptr);

}  // namespace scf
