#pragma once

#include "scf/universe.hpp"

namespace scf {

enum class ModelRel { Less, Equiv, Greater, Incomparable };

const char* relName(ModelRel r);

/// The comparison derived from the comparison point: with b = beta(M, N),
/// Equiv when both traces agree below b, Less when M's restriction below b is
/// one of N's given sets, Greater symmetrically, Incomparable otherwise.
ModelRel compare(const Universe& u, const CountableModel& m, const CountableModel& n);

inline bool lessOrEquiv(ModelRel r) { return r == ModelRel::Less || r == ModelRel::Equiv; }

/// Every pair of models named by `ids` is comparable.
bool isAdequate(const Universe& u, const std::set<ModelId>& ids);

/// A ∪ { M ∩ N : M ∈ A, M < N }. Requires A adequate and N ∈ A; the result is
/// checked adequate. Throws NotClosed when an intersection model is missing.
std::set<ModelId> closureUnderCountable(const Universe& u, const std::set<ModelId>& a,
                                        const ModelId& n);

/// A ∪ { M ∩ P : M ∈ A }.
std::set<ModelId> closureUnderUncountable(const Universe& u, const std::set<ModelId>& a,
                                          const ModelId& p);

/// Least element of trace(M) that is >= bound, when one exists.
std::optional<uint32_t> minAbove(const Universe& u, const CountableModel& m, Ord bound);

/// r*(A): every ordinal min(trace(M) \ beta(K, M)) arising from a pair
/// K ~ M of distinct models in A.
OrdVec rStar(const Universe& u, const std::set<ModelId>& a);

/// Convenience filter: r*(A) ∩ S.
OrdVec rStar(const Universe& u, const std::set<ModelId>& a, const OrdVec& s);

/// s*(A): indices i < lambdaStar witnessed by a pair M ~ N in A with
/// i in both index sets and min(trace(M) \ beta(M, N)) in S_i.
OrdVec sStar(const Universe& u, const std::set<ModelId>& a);

}  // namespace scf
