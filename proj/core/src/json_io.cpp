#include "scf/json_io.hpp"

#include <fstream>
#include <sstream>

namespace scf {

namespace {

[[noreturn]] void parseFail(const std::string& path, const std::string& what) {
  fail(Errc::ParseError, path + ": " + what);
}

const json& member(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) parseFail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) parseFail(path, std::string("missing field '") + key + "'");
  return *it;
}

uint32_t asU32(const json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<int64_t>() < 0)
    parseFail(path, "expected a nonnegative integer");
  return j.get<uint32_t>();
}

std::string asStr(const json& j, const std::string& path) {
  if (!j.is_string()) parseFail(path, "expected a string");
  return j.get<std::string>();
}

bool asBool(const json& j, const std::string& path) {
  if (!j.is_boolean()) parseFail(path, "expected a boolean");
  return j.get<bool>();
}

OrdVec ordvecFromJson(const json& j, const std::string& path) {
  if (!j.is_array()) parseFail(path, "expected an array of ordinals");
  OrdVec out;
  for (size_t i = 0; i < j.size(); ++i)
    out.push_back(asU32(j[i], path + "[" + std::to_string(i) + "]"));
  OrdVec norm = ords::normalized(out);
  if (norm != out) parseFail(path, "array is not sorted and duplicate-free");
  return out;
}

json toJson(const OrdVec& v) { return json(v); }

}  // namespace

json toJson(Ord o) { return o.isKappa() ? json("kappa") : json(o.finite()); }

Ord ordFromJson(const json& j, const std::string& path) {
  if (j.is_string()) {
    if (j.get<std::string>() == "kappa") return Ord::kappa();
    parseFail(path, "expected an ordinal or \"kappa\"");
  }
  return Ord::fin(asU32(j, path));
}

json toJson(const TraceSet& t) { return json(t.elems()); }

TraceSet traceFromJson(const json& j, const std::string& path) {
  return TraceSet(ordvecFromJson(j, path));
}

json toJson(const UniverseConfig& c) {
  json fam = json::array();
  for (const auto& s : c.stationaryFamily) fam.push_back(toJson(s));
  return json{{"lambdaSet", toJson(c.lambdaSet)},
              {"lambdaStar", c.lambdaStar},
              {"omega1Cut", c.omega1Cut},
              {"size", c.size},
              {"stationaryFamily", fam}};
}

json toJson(const Universe& u) {
  json cs = json::object();
  for (const auto& [id, m] : u.countables) {
    json fam = json::array();
    for (const auto& t : m.setFamily) fam.push_back(toJson(t));
    json members = json::array();
    for (const auto& x : m.modelFamily) members.push_back(x);
    json idx = json::array();
    for (uint32_t i : m.indexSet) idx.push_back(i);
    cs[id] = json{{"indexSet", idx},
                  {"modelFamily", members},
                  {"setFamily", fam},
                  {"simple", m.simple},
                  {"trace", toJson(m.trace)}};
  }
  json us = json::object();
  for (const auto& [id, p] : u.uncountables) {
    json members = json::array();
    for (const auto& x : p.modelFamily) members.push_back(x);
    json idx = json::array();
    for (uint32_t i : p.indexSet) idx.push_back(i);
    us[id] = json{{"cut", p.cut},
                  {"indexSet", idx},
                  {"modelFamily", members},
                  {"simple", p.simple}};
  }
  return json{{"config", toJson(u.config)}, {"countables", cs}, {"uncountables", us}};
}

Universe universeFromJson(const json& j) {
  Universe u;
  const std::string root = "universe";
  const json& cfg = member(j, "config", root);
  u.config.size = asU32(member(cfg, "size", "config"), "config.size");
  u.config.omega1Cut = asU32(member(cfg, "omega1Cut", "config"), "config.omega1Cut");
  u.config.lambdaSet = ordvecFromJson(member(cfg, "lambdaSet", "config"), "config.lambdaSet");
  u.config.lambdaStar = asU32(member(cfg, "lambdaStar", "config"), "config.lambdaStar");
  const json& fam = member(cfg, "stationaryFamily", "config");
  if (!fam.is_array()) parseFail("config.stationaryFamily", "expected an array");
  for (size_t i = 0; i < fam.size(); ++i)
    u.config.stationaryFamily.push_back(
        ordvecFromJson(fam[i], "config.stationaryFamily[" + std::to_string(i) + "]"));

  const json& cs = member(j, "countables", root);
  if (!cs.is_object()) parseFail("countables", "expected an object");
  for (auto it = cs.begin(); it != cs.end(); ++it) {
    const std::string path = "countables." + it.key();
    CountableModel m;
    m.id = it.key();
    m.trace = traceFromJson(member(*it, "trace", path), path + ".trace");
    for (uint32_t i : ordvecFromJson(member(*it, "indexSet", path), path + ".indexSet"))
      m.indexSet.insert(i);
    const json& sf = member(*it, "setFamily", path);
    if (!sf.is_array()) parseFail(path + ".setFamily", "expected an array");
    for (size_t i = 0; i < sf.size(); ++i)
      m.setFamily.insert(
          traceFromJson(sf[i], path + ".setFamily[" + std::to_string(i) + "]"));
    const json& mf = member(*it, "modelFamily", path);
    if (!mf.is_array()) parseFail(path + ".modelFamily", "expected an array");
    for (size_t i = 0; i < mf.size(); ++i)
      m.modelFamily.insert(asStr(mf[i], path + ".modelFamily[" + std::to_string(i) + "]"));
    m.simple = asBool(member(*it, "simple", path), path + ".simple");
    u.countables[m.id] = std::move(m);
  }

  const json& us = member(j, "uncountables", root);
  if (!us.is_object()) parseFail("uncountables", "expected an object");
  for (auto it = us.begin(); it != us.end(); ++it) {
    const std::string path = "uncountables." + it.key();
    UncountableModel p;
    p.id = it.key();
    p.cut = asU32(member(*it, "cut", path), path + ".cut");
    for (uint32_t i : ordvecFromJson(member(*it, "indexSet", path), path + ".indexSet"))
      p.indexSet.insert(i);
    const json& mf = member(*it, "modelFamily", path);
    if (!mf.is_array()) parseFail(path + ".modelFamily", "expected an array");
    for (size_t i = 0; i < mf.size(); ++i)
      p.modelFamily.insert(asStr(mf[i], path + ".modelFamily[" + std::to_string(i) + "]"));
    p.simple = asBool(member(*it, "simple", path), path + ".simple");
    u.uncountables[p.id] = std::move(p);
  }
  return u;
}

json toJson(const DomainElement& e) {
  if (e.isOrd()) return json{{"alpha", e.alpha()}, {"kind", "ordS"}};
  json out{{"elems", toJson(e.set())}, {"kind", "set"}};
  if (e.witness())
    out["witness"] = json{{"alpha", toJson(e.witness()->alpha)}, {"model", e.witness()->model}};
  return out;
}

DomainElement domainElementFromJson(const json& j, const std::string& path) {
  std::string kind = asStr(member(j, "kind", path), path + ".kind");
  if (kind == "ordS") return DomainElement::ordS(asU32(member(j, "alpha", path), path + ".alpha"));
  if (kind != "set") parseFail(path + ".kind", "expected \"ordS\" or \"set\"");
  TraceSet t = traceFromJson(member(j, "elems", path), path + ".elems");
  std::optional<Witness> w;
  if (j.contains("witness")) {
    const json& wj = j["witness"];
    w = Witness{asStr(member(wj, "model", path), path + ".witness.model"),
                ordFromJson(member(wj, "alpha", path), path + ".witness.alpha")};
  }
  return DomainElement::setElem(std::move(t), std::move(w));
}

json toJson(const PCondition& p) {
  json fmap = json::array();
  for (const auto& [x, chain] : p.f) {
    json ch = json::array();
    for (const auto& k : chain) ch.push_back(toJson(k));
    fmap.push_back(json{{"chain", ch}, {"key", toJson(x)}});
  }
  json gmap = json::array();
  for (const auto& [key, val] : p.g) {
    gmap.push_back(json{{"key", json{{"elem", toJson(key.x)}, {"set", toJson(key.k)}}},
                        {"value", toJson(val)}});
  }
  json as = json::array();
  for (const auto& m : p.a) as.push_back(m);
  return json{{"aSet", as},
              {"fMap", fmap},
              {"gMap", gmap},
              {"sIndex", p.s.isUnion ? json("union") : json(p.s.coord)}};
}

PCondition pconditionFromJson(const json& j) {
  PCondition p;
  const json& si = member(j, "sIndex", "condition");
  if (si.is_string()) {
    if (si.get<std::string>() != "union") parseFail("sIndex", "expected \"union\" or an index");
    p.s = StationaryRef::unionSet();
  } else {
    p.s = StationaryRef::coordSet(asU32(si, "sIndex"));
  }
  const json& as = member(j, "aSet", "condition");
  if (!as.is_array()) parseFail("aSet", "expected an array");
  for (size_t i = 0; i < as.size(); ++i)
    p.a.insert(asStr(as[i], "aSet[" + std::to_string(i) + "]"));

  const json& fmap = member(j, "fMap", "condition");
  if (!fmap.is_array()) parseFail("fMap", "expected an array");
  for (size_t i = 0; i < fmap.size(); ++i) {
    std::string path = "fMap[" + std::to_string(i) + "]";
    DomainElement x = domainElementFromJson(member(fmap[i], "key", path), path + ".key");
    const json& ch = member(fmap[i], "chain", path);
    if (!ch.is_array()) parseFail(path + ".chain", "expected an array");
    Chain chain;
    for (size_t k = 0; k < ch.size(); ++k)
      chain.push_back(traceFromJson(ch[k], path + ".chain[" + std::to_string(k) + "]"));
    if (p.f.count(x)) parseFail(path, "duplicate domain element");
    p.f[x] = std::move(chain);
  }

  const json& gmap = member(j, "gMap", "condition");
  if (!gmap.is_array()) parseFail("gMap", "expected an array");
  for (size_t i = 0; i < gmap.size(); ++i) {
    std::string path = "gMap[" + std::to_string(i) + "]";
    const json& key = member(gmap[i], "key", path);
    GKey gk{traceFromJson(member(key, "set", path), path + ".key.set"),
            domainElementFromJson(member(key, "elem", path), path + ".key.elem")};
    OrdVec val = ordvecFromJson(member(gmap[i], "value", path), path + ".value");
    if (p.g.count(gk)) parseFail(path, "duplicate g pair");
    p.g[gk] = std::move(val);
  }
  return p;
}

json toJson(const QCondition& p) {
  json fb = json::array();
  for (const auto& [i, cond] : p.fBig)
    fb.push_back(json{{"condition", toJson(cond)}, {"index", i}});
  json as = json::array();
  for (const auto& m : p.a) as.push_back(m);
  return json{{"aSet", as}, {"fBig", fb}};
}

QCondition qconditionFromJson(const json& j) {
  QCondition p;
  const json& as = member(j, "aSet", "condition");
  if (!as.is_array()) parseFail("aSet", "expected an array");
  for (size_t i = 0; i < as.size(); ++i)
    p.a.insert(asStr(as[i], "aSet[" + std::to_string(i) + "]"));
  const json& fb = member(j, "fBig", "condition");
  if (!fb.is_array()) parseFail("fBig", "expected an array");
  for (size_t i = 0; i < fb.size(); ++i) {
    std::string path = "fBig[" + std::to_string(i) + "]";
    uint32_t idx = asU32(member(fb[i], "index", path), path + ".index");
    if (p.fBig.count(idx)) parseFail(path, "duplicate coordinate");
    p.fBig[idx] = pconditionFromJson(member(fb[i], "condition", path));
  }
  return p;
}

json toJson(const AxiomReport& r) {
  json entries = json::array();
  bool valid = true;
  for (const auto& e : r.entries) {
    entries.push_back(json{{"axiom", e.axiom}, {"passed", e.passed}, {"witness", e.witness}});
    valid &= e.passed;
  }
  return json{{"entries", entries}, {"valid", valid}};
}

json toJson(const std::vector<ClauseViolation>& v) {
  json arr = json::array();
  for (const auto& c : v) arr.push_back(json{{"clause", c.clause}, {"witness", c.witness}});
  return json{{"valid", v.empty()}, {"violations", arr}};
}

std::string canonicalDump(const json& j) { return j.dump(); }

std::string contentHash(const json& j) {
  std::string bytes = canonicalDump(j);
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

json loadJsonFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::ParseError, "cannot open " + path);
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  try {
    return json::parse(bytes);
  } catch (const json::parse_error& e) {
    size_t line = 1, col = 1;
    for (size_t i = 0; i + 1 < e.byte && i < bytes.size(); ++i) {
      if (bytes[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    fail(Errc::ParseError, path + ":" + std::to_string(line) + ":" + std::to_string(col) +
                               ": " + e.what());
  }
}

void saveJsonFile(const std::string& path, const json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::ParseError, "cannot write " + path);
  out << canonicalDump(j) << "\n";
}

}  // namespace scf
