#pragma once

#include "scf/generator.hpp"
#include "scf/harness/bundle.hpp"

namespace scf::harness {

/// Constraint for building conditions inside a model (every component must
/// belong to the model). Unset means unconstrained.
struct InsideModel {
  std::optional<ModelRef> m;

  bool ordAllowed(const Universe& u, uint32_t alpha) const;
  bool modelAllowed(const Universe& u, const ModelId& id) const;
};

/// Randomized valid-condition builder: applies a seeded sequence of
/// validity-preserving operations (ordinal extension, model adjunction,
/// g strengthening at chain tops, saturation) starting from a seed condition.
PCondition buildP(const Universe& u, StationaryRef ref, SplitMix64& rng, uint32_t steps,
                  const InsideModel& inside = {});

/// Strengthen p inside a model while keeping it below p.
PCondition strengthenPInside(const Universe& u, const PCondition& p, SplitMix64& rng,
                             uint32_t steps, const InsideModel& inside);

/// Enter D_N below p (requires N ∈ A_p): intersection closure + saturation.
PCondition makeDN(const Universe& u, const PCondition& p, const ModelId& n);

/// Enter D_Q below p: intersection closure with the uncountable model.
PCondition makeDQ(const Universe& u, const PCondition& p, const ModelId& q);

/// Enter D_N ∩ D_Q below p (requires N ∈ A_p).
PCondition makeDNDQ(const Universe& u, const PCondition& p, const ModelId& n, const ModelId& q);

/// Product-level analogues.
QCondition buildQ(const Universe& u, SplitMix64& rng, uint32_t steps,
                  const InsideModel& inside = {});
QCondition strengthenQInside(const Universe& u, const QCondition& p, SplitMix64& rng,
                             uint32_t steps, const InsideModel& inside);
/// Like strengthenQInside, but newly opened coordinates are confined to
/// `allowedIndices` when given.
QCondition strengthenQIndices(const Universe& u, const QCondition& p, SplitMix64& rng,
                              uint32_t steps, const InsideModel& inside,
                              const std::optional<OrdVec>& allowedIndices);
/// Adjoins a model to the side conditions and to every coordinate.
QCondition qAdjoinModel(const Universe& u, const QCondition& p, const ModelId& n);
QCondition makeDNQ(const Universe& u, const QCondition& p, const ModelId& n);
QCondition makeDPQ(const Universe& u, const QCondition& p, const ModelId& pModel);
/// Enter D(N) ∩ D(P) jointly below p (requires N among the side conditions).
QCondition qMakeDNDP(const Universe& u, const QCondition& p, const ModelId& n,
                     const ModelId& pModel);

/// Simple countable models of u with nonempty modelFamily, sorted by id.
std::vector<ModelId> simpleCountables(const Universe& u);
std::vector<ModelId> simpleUncountables(const Universe& u);

/// A generated universe for property trials; recipe knobs live in GenParams.
Universe trialUniverse(SplitMix64& rng, const GenParams& params);

}  // namespace scf::harness
