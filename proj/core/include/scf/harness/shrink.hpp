#pragma once

#include "scf/harness/bundle.hpp"

namespace scf::harness {

/// Greedy single-element shrinking: repeatedly tries deleting one universe
/// model, one condition domain element, one g ordinal, or one product
/// coordinate, keeping deletions under which the bundle still fails
/// (premise holds and the conclusion does not). The result is 1-minimal:
/// no single deletion of it still fails.
Bundle shrinkCounterexample(const Bundle& ce,
                            const std::function<bool(const Bundle&)>& stillFails);

}  // namespace scf::harness
