#pragma once

#include <nlohmann/json.hpp>

#include "scf/qforcing.hpp"

namespace scf {

using nlohmann::json;

// Serialization is canonical by construction: object keys are sorted (the
// default json object is map-backed), sets appear as sorted arrays, maps as
// arrays of entries in canonical key order, kappa as the string "kappa".
// canonicalDump(parse(doc)) is byte-identical to doc for canonical documents.

json toJson(Ord o);
Ord ordFromJson(const json& j, const std::string& path);

json toJson(const TraceSet& t);
TraceSet traceFromJson(const json& j, const std::string& path);

json toJson(const UniverseConfig& c);
json toJson(const Universe& u);
Universe universeFromJson(const json& j);

json toJson(const DomainElement& e);
DomainElement domainElementFromJson(const json& j, const std::string& path);

json toJson(const PCondition& p);
PCondition pconditionFromJson(const json& j);

json toJson(const QCondition& p);
QCondition qconditionFromJson(const json& j);

json toJson(const AxiomReport& r);
json toJson(const std::vector<ClauseViolation>& v);

std::string canonicalDump(const json& j);

/// FNV-1a over the canonical bytes; used to pin fixtures in reports.
std::string contentHash(const json& j);

json loadJsonFile(const std::string& path);
void saveJsonFile(const std::string& path, const json& j);

}  // namespace scf
