#pragma once

#include "scf/universe.hpp"

namespace scf {

struct GenParams {
  uint32_t minSize = 28, maxSize = 44;    // U
  uint32_t minCut = 6, maxCut = 10;       // W
  uint32_t minLambda = 4, maxLambda = 6;  // |Lambda|
  uint32_t minLambdaStar = 1, maxLambdaStar = 3;
  // Bounds on the countable models: the minimum is a hard bound on the
  // final universe; the maximum bounds the seeded family (spine plus
  // sibling) while intersection closure may add a few more.
  uint32_t minCountables = 2, maxCountables = 6;
  uint32_t minUncountables = 0, maxUncountables = 2;
  // Probability knobs, in percent.
  uint32_t siblingPct = 60;      // chance of adding an equivalent sibling pair
  uint32_t lowCutPct = 50;       // chance an uncountable cut lands inside a trace
  uint32_t dropIndexPct = 25;    // chance a model drops one index
  uint32_t attemptBudget = 600;  // rejection-sampling budget
};

struct GenStats {
  uint32_t attempts = 0;
  std::map<std::string, uint32_t> rejectionsByAxiom;
  uint32_t defectRejections = 0;
};

/// Generate-and-filter universe construction, deterministic in the seed.
/// The output passes validateUniverse and scanUniverseDefects.
/// Throws GenerationExhausted when the attempt budget runs out.
Universe generateUniverse(uint64_t seed, const GenParams& params, GenStats* stats = nullptr);

/// Ambient coherence facts the axiom ledger does not capture but the
/// condition calculus relies on (hull members are sup-separated, hull
/// membership is representation-independent and transitive). Valid universes
/// violating these are rejected by the generator as defective.
std::vector<std::string> scanUniverseDefects(const Universe& u);

}  // namespace scf
