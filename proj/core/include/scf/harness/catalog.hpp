#pragma once

#include <functional>

#include "scf/harness/builders.hpp"

namespace scf::harness {

struct EvalResult {
  bool premise = false;
  bool pass = true;
  std::string note;
  Counters counters;

  static EvalResult miss() { return EvalResult{false, true, "", {}}; }
  static EvalResult ok() { return EvalResult{true, true, "", {}}; }
  static EvalResult bad(std::string why) { return EvalResult{true, false, std::move(why), {}}; }
};

/// One checkable law: a constructive input generator (deterministic in the
/// seed) and a pure evaluator usable for replay and shrinking.
struct PropertyDef {
  std::string id;         // e.g. "P-7.19"
  std::string statement;  // what the law says, in artifact terms
  uint32_t defaultFloorPct = 30;
  std::function<Bundle(uint64_t seed, const GenParams&)> generate;
  std::function<EvalResult(const Bundle&)> eval;
};

const std::vector<PropertyDef>& catalog();
const PropertyDef& property(const std::string& id);  // throws UnknownProperty
bool hasProperty(const std::string& id);

}  // namespace scf::harness
