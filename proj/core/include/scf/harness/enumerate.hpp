#pragma once

#include "scf/pforcing.hpp"

namespace scf::harness {

struct EnumBounds {
  uint32_t maxA = 1;
  uint32_t maxDom = 2;
  uint32_t maxGSize = 1;        // per-pair g value size
  uint64_t budget = 20'000'000; // candidate evaluations before BudgetExceeded
};

/// Exhaustive, duplicate-free, canonically ordered enumeration of the valid
/// conditions within the bounds. The sink returns false to stop early.
/// Throws BudgetExceeded when the candidate budget runs out.
void enumerateConditions(const Universe& u, StationaryRef ref, const EnumBounds& bounds,
                         const std::function<bool(const PCondition&)>& sink);

uint64_t countConditions(const Universe& u, StationaryRef ref, const EnumBounds& bounds);

}  // namespace scf::harness
