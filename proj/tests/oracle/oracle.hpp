#pragma once

// Straight-line re-implementations of the definitional layer, written as
// literal quantifier loops over the finite data. Deliberately independent of
// the optimized operators in the main library: these functions re-derive
// everything from first principles so the two code paths can be compared.

#include "scf/pcondition.hpp"

namespace oracle {

using namespace scf;

Ord beta(const Universe& u, const ModelId& m, const ModelId& n);
bool memSet(const Universe& u, const TraceSet& k, const ModelId& n);
bool hullSet(const Universe& u, const TraceSet& k, const TraceSet& target);
ModelRel compare(const Universe& u, const ModelId& m, const ModelId& n);
OrdVec rStar(const Universe& u, const std::set<ModelId>& a);
OrdVec sStar(const Universe& u, const std::set<ModelId>& a);

/// The seven clauses, evaluated clause by clause; returns the violated ids.
std::set<std::string> validateP(const Universe& u, const PCondition& p);
bool leqP(const Universe& u, const PCondition& q, const PCondition& p);
PCondition restrictToCountable(const Universe& u, const PCondition& r, const ModelId& n);
PCondition restrictToUncountable(const Universe& u, const PCondition& q, const ModelId& qm);

}  // namespace oracle
