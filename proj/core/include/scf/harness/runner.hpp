#pragma once

#include "scf/harness/catalog.hpp"

namespace scf::harness {

struct CheckOutcome {
  std::string property;
  uint64_t seed = 0;
  uint32_t trials = 0;
  uint32_t premiseFloor = 0;
  uint32_t premiseHits = 0;
  uint32_t failures = 0;
  bool vacuous = false;
  std::optional<json> firstCounterexample;  // bundle + note, lowest trial index
  std::optional<json> shrunkCounterexample;
  Counters counters;
  double elapsedMs = 0;  // informational; never serialized into reports

  bool passed() const { return failures == 0 && !vacuous; }
};

/// Deterministic in (id, seed, trials, premiseFloor); the job count only
/// affects wall time. Counterexamples are shrunk before being recorded.
CheckOutcome runProperty(const std::string& id, uint64_t seed, uint32_t trials,
                         uint32_t premiseFloor, uint32_t jobs = 1,
                         const GenParams& params = GenParams{});

/// Same runner over an ad-hoc definition; lets tests exercise the failure
/// and shrinking paths with deliberately broken laws.
CheckOutcome runPropertyDef(const PropertyDef& def, uint64_t seed, uint32_t trials,
                            uint32_t premiseFloor, uint32_t jobs = 1,
                            const GenParams& params = GenParams{});

/// Default absolute floor for a property at a given trial count.
uint32_t defaultFloor(const std::string& id, uint32_t trials);

/// Report documents; elapsed time is deliberately excluded so identical runs
/// serialize byte-identically.
json reportJson(const CheckOutcome& o);
json runAllReport(uint64_t seed, uint32_t trials, uint32_t jobs, const GenParams& params,
                  std::vector<CheckOutcome>* outcomes = nullptr);

/// Re-evaluates a stored counterexample bundle against its property.
EvalResult replay(const std::string& id, const Bundle& bundle);

}  // namespace scf::harness
