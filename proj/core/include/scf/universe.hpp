#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "scf/trace_set.hpp"

namespace scf {

/// Parameters of a finite universe: size U, the omega1 cut W, the set Lambda
/// of comparison-point candidates, and the family of stationary sets S_i.
struct UniverseConfig {
  uint32_t size = 2;       // U
  uint32_t omega1Cut = 1;  // W
  OrdVec lambdaSet;        // subset of [W, U)
  uint32_t lambdaStar = 1;
  std::vector<OrdVec> stationaryFamily;  // one entry per i < lambdaStar
};

/// A countable model trace: its ordinals, the indices i it knows about, the
/// trace sets it contains (setFamily realizes "x is an element of M") and the
/// models it contains (modelFamily realizes "N is an element of M").
struct CountableModel {
  ModelId id;
  TraceSet trace;
  std::set<uint32_t> indexSet;
  std::set<TraceSet> setFamily;
  std::set<ModelId> modelFamily;
  bool simple = false;

  uint32_t delta() const { return trace.deltaPrefix(); }
};

/// An uncountable model trace: determined by its cut alpha_P = P ∩ kappa.
struct UncountableModel {
  ModelId id;
  uint32_t cut = 0;
  std::set<uint32_t> indexSet;
  std::set<ModelId> modelFamily;  // countable members
  bool simple = false;
};

struct Universe {
  UniverseConfig config;
  std::map<ModelId, CountableModel> countables;
  std::map<ModelId, UncountableModel> uncountables;

  const CountableModel& countable(const ModelId& id) const;
  const UncountableModel& uncountable(const ModelId& id) const;
  bool hasCountable(const ModelId& id) const { return countables.count(id) != 0; }
  bool hasUncountable(const ModelId& id) const { return uncountables.count(id) != 0; }

  /// The union of all S_i; the single forcing runs over this set.
  OrdVec unionStationary() const;
  const OrdVec& stationary(uint32_t i) const;
};

/// Refers to a model of either kind by id.
struct ModelRef {
  bool isCountable = true;
  ModelId id;

  static ModelRef countable(ModelId m) { return ModelRef{true, std::move(m)}; }
  static ModelRef uncountable(ModelId m) { return ModelRef{false, std::move(m)}; }

  friend bool operator==(const ModelRef&, const ModelRef&) = default;
  friend auto operator<=>(const ModelRef&, const ModelRef&) = default;
};

/// Comparison point of two countable models: the least Lambda element
/// strictly above the largest ordinal common to both traces.
/// Throws NoComparisonPoint when Lambda has no such element.
Ord beta(const Universe& u, const CountableModel& m, const CountableModel& n);

/// True when K is one of the given sets of N (an element of setFamily).
bool memSet(const Universe& u, const TraceSet& k, const CountableModel& n);

/// Hull membership targets: either the hull of a cut [0, alpha) with
/// alpha in Lambda ∪ {kappa}, or the hull of a trace set (resolved through
/// its representations (model, cut) in the universe).
struct HullTarget {
  enum class Kind { Cut, Set } kind = Kind::Cut;
  Ord alpha;   // Kind::Cut
  TraceSet t;  // Kind::Set

  static HullTarget cut(Ord a) { return HullTarget{Kind::Cut, a, {}}; }
  static HullTarget set(TraceSet s) { return HullTarget{Kind::Set, Ord::fin(0), std::move(s)}; }
};

/// All (model, cut) representations of t in u, cuts drawn from
/// Lambda ∪ {kappa}; ordered by (model id, cut) with kappa last.
std::vector<std::pair<ModelId, Ord>> representationsOf(const Universe& u, const TraceSet& t);

/// K ∈ Sk(z). For a cut target this is K ⊆ [0, alpha); for a set target it is
/// a disjunction over all representations (M', alpha') of the target:
/// memSet(K, M') and K ⊆ [0, alpha').
/// Throws NoRepresentation for a set target with no representation at all.
bool hull(const Universe& u, const TraceSet& k, const HullTarget& z);

/// The model of u realizing M ∩ N (identity by (trace, indexSet)).
/// Requires {M, N} adequate. Throws NotClosed when no such model exists.
const CountableModel& intersectCountable(const Universe& u, const CountableModel& m,
                                         const CountableModel& n);

/// The model of u realizing M ∩ P.
const CountableModel& intersectWithUncountable(const Universe& u, const CountableModel& m,
                                               const UncountableModel& p);

struct AxiomEntry {
  std::string axiom;  // "A1" .. "A14"
  bool passed = true;
  std::string witness;  // human-readable first violating tuple
};

struct AxiomReport {
  std::vector<AxiomEntry> entries;

  bool allPassed() const {
    for (const auto& e : entries)
      if (!e.passed) return false;
    return true;
  }
  const AxiomEntry& entry(const std::string& id) const;
};

/// Runs the full axiom ledger A1..A14. Never throws; structural problems are
/// reported as A1 and later axioms are evaluated on the reachable part.
AxiomReport validateUniverse(const Universe& u);

}  // namespace scf
