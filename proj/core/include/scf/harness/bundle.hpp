#pragma once

#include "scf/json_io.hpp"

namespace scf::harness {

/// The concrete inputs to one property trial: a universe plus named model
/// picks, conditions, and scalar arguments. Bundles serialize losslessly so
/// counterexamples can be replayed and shrunk.
struct Bundle {
  Universe u;
  std::map<std::string, ModelId> picks;
  std::map<std::string, PCondition> pconds;
  std::map<std::string, QCondition> qconds;
  std::map<std::string, int64_t> nums;
  std::map<std::string, OrdVec> ordsets;
  std::map<std::string, std::vector<ModelId>> idsets;

  const CountableModel& pickC(const std::string& name) const {
    return u.countable(picks.at(name));
  }
};

json toJson(const Bundle& b);
Bundle bundleFromJson(const json& j);

}  // namespace scf::harness
