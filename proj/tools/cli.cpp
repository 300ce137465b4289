#include "cli.hpp"

#include <CLI11.hpp>
#include <iomanip>
#include <sstream>

#include "scf/fixtures.hpp"
#include "scf/harness/enumerate.hpp"
#include "scf/harness/runner.hpp"
#include "scf/json_io.hpp"

namespace scf::cli {

namespace {

using namespace scf;
using namespace scf::harness;

void emit(std::ostream& out, const json& j, const std::string& outPath) {
  if (!outPath.empty()) saveJsonFile(outPath, j);
  out << canonicalDump(j) << "\n";
}

ModelRef resolveModel(const Universe& u, const std::string& id) {
  if (u.hasCountable(id)) return ModelRef::countable(id);
  if (u.hasUncountable(id)) return ModelRef::uncountable(id);
  fail(Errc::UnknownId, "no model '" + id + "' in the universe");
}

int cmdValidateUniverse(const std::string& file, const std::string& outPath,
                        std::ostream& out) {
  Universe u = universeFromJson(loadJsonFile(file));
  AxiomReport rep = validateUniverse(u);
  emit(out, toJson(rep), outPath);
  return rep.allPassed() ? 0 : 1;
}

int cmdGenUniverse(uint64_t seed, const GenParams& params, const std::string& outPath,
                   const std::string& statsPath, std::ostream& out) {
  GenStats stats;
  Universe u = generateUniverse(seed, params, &stats);
  emit(out, toJson(u), outPath);
  if (!statsPath.empty()) {
    json rej = json::object();
    for (const auto& [k, v] : stats.rejectionsByAxiom) rej[k] = v;
    saveJsonFile(statsPath, json{{"attempts", stats.attempts},
                                 {"defectRejections", stats.defectRejections},
                                 {"rejections", rej}});
  }
  return 0;
}

int cmdValidateCond(const std::string& uniFile, const std::string& condFile,
                    const std::string& kind, const std::string& outPath, std::ostream& out) {
  Universe u = universeFromJson(loadJsonFile(uniFile));
  std::vector<ClauseViolation> violations;
  if (kind == "q") {
    violations = validateQ(u, qconditionFromJson(loadJsonFile(condFile)));
  } else {
    violations = validateP(u, pconditionFromJson(loadJsonFile(condFile)));
  }
  emit(out, toJson(violations), outPath);
  return violations.empty() ? 0 : 1;
}

int cmdRestrict(const std::string& uniFile, const std::string& condFile,
                const std::string& model, const std::string& kind, const std::string& outPath,
                std::ostream& out) {
  Universe u = universeFromJson(loadJsonFile(uniFile));
  ModelRef m = resolveModel(u, model);
  if (kind == "q") {
    QCondition q = qconditionFromJson(loadJsonFile(condFile));
    emit(out, toJson(restrictQ(u, q, m)), outPath);
  } else {
    PCondition p = pconditionFromJson(loadJsonFile(condFile));
    PCondition res = m.isCountable ? restrictToCountable(u, p, m.id)
                                   : restrictToUncountable(u, p, m.id);
    emit(out, toJson(res), outPath);
  }
  return 0;
}

int cmdAmalgamate(const std::string& mode, const std::string& uniFile, const std::string& rFile,
                  const std::string& wFile, const std::string& model,
                  const std::string& outPath, std::ostream& out) {
  Universe u = universeFromJson(loadJsonFile(uniFile));
  if (mode == "product") {
    QCondition r = qconditionFromJson(loadJsonFile(rFile));
    QCondition w = qconditionFromJson(loadJsonFile(wFile));
    OplusQResult res = oplusQ(u, w, r, resolveModel(u, model));
    json doc{{"condition", toJson(res.cond)},
             {"widened", res.normalized},
             {"widenedBy", res.addedIndices}};
    emit(out, doc, outPath);
    return 0;
  }
  PCondition r = pconditionFromJson(loadJsonFile(rFile));
  PCondition w = pconditionFromJson(loadJsonFile(wFile));
  PCondition res;
  if (mode == "countable") {
    res = amalgCountable(u, w, r, model);
  } else if (mode == "uncountable") {
    res = amalgUncountable(u, w, r, model);
  } else {
    fail(Errc::ParseError, "unknown mode '" + mode + "'");
  }
  emit(out, toJson(res), outPath);
  return 0;
}

int cmdProject(const std::string& uniFile, const std::string& condFile, uint32_t index,
               const std::string& outPath, std::ostream& out) {
  Universe u = universeFromJson(loadJsonFile(uniFile));
  QCondition q = qconditionFromJson(loadJsonFile(condFile));
  emit(out, toJson(projectCoordinate(u, q, index)), outPath);
  return 0;
}

int cmdCheck(const std::string& prop, uint64_t seed, uint32_t trials, int64_t floorFlag,
             uint32_t jobs, const std::string& outPath, const std::string& replayFile,
             std::ostream& out, std::ostream& err) {
  if (!replayFile.empty()) {
    json j = loadJsonFile(replayFile);
    Bundle b = bundleFromJson(j.contains("bundle") ? j.at("bundle") : j);
    EvalResult res = replay(prop, b);
    emit(out,
         json{{"note", res.note},
              {"pass", res.pass},
              {"premise", res.premise},
              {"property", prop}},
         outPath);
    return (res.premise && !res.pass) ? 1 : 0;
  }
  uint32_t floorV = floorFlag >= 0 ? static_cast<uint32_t>(floorFlag)
                                   : defaultFloor(prop, trials);
  CheckOutcome o = runProperty(prop, seed, trials, floorV, jobs);
  emit(out, reportJson(o), outPath);
  err << prop << ": " << (o.passed() ? "pass" : "FAIL") << " (" << o.premiseHits << "/"
      << o.trials << " premise hits, " << o.failures << " failures, "
      << std::fixed << std::setprecision(1) << o.elapsedMs << " ms)\n";
  return o.passed() ? 0 : 1;
}

int cmdFuzzAll(uint64_t seed, uint32_t trials, uint32_t jobs, const std::string& outPath,
               std::ostream& out, std::ostream& err) {
  std::vector<CheckOutcome> outcomes;
  json rep = runAllReport(seed, trials, jobs, GenParams{}, &outcomes);
  emit(out, rep, outPath);
  for (const auto& o : outcomes)
    err << (o.passed() ? "pass " : "FAIL ") << o.property << "\n";
  return rep.at("allPass").get<bool>() ? 0 : 1;
}

int cmdReport(const std::string& file, std::ostream& out) {
  json j = loadJsonFile(file);
  json results = json::array();
  if (j.contains("results")) results = j.at("results");
  else results.push_back(j);
  out << std::left << std::setw(18) << "property" << std::right << std::setw(9) << "trials"
      << std::setw(9) << "hits" << std::setw(7) << "floor" << std::setw(6) << "fail"
      << std::setw(9) << "status" << "\n";
  bool all = true;
  for (const auto& r : results) {
    bool passed = r.at("passed").get<bool>();
    all &= passed;
    out << std::left << std::setw(18) << r.at("property").get<std::string>() << std::right
        << std::setw(9) << r.at("trials").get<uint64_t>() << std::setw(9)
        << r.at("premiseHits").get<uint64_t>() << std::setw(7)
        << r.at("premiseFloor").get<uint64_t>() << std::setw(6)
        << r.at("failures").get<uint64_t>() << std::setw(9)
        << (passed ? "pass" : (r.at("vacuous").get<bool>() ? "VACUOUS" : "FAIL")) << "\n";
  }
  return all ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"side-condition forcing laboratory"};
  app.require_subcommand(1);

  // validate-universe
  std::string vuFile, vuOut;
  auto* vu = app.add_subcommand("validate-universe", "run the axiom ledger on a universe");
  vu->add_option("file", vuFile)->required();
  vu->add_option("--out", vuOut);

  // gen-universe
  uint64_t genSeed = 0;
  std::string genOut, genStats;
  GenParams params;
  auto* gu = app.add_subcommand("gen-universe", "generate a valid universe");
  gu->add_option("--seed", genSeed)->required();
  gu->add_option("--out", genOut);
  gu->add_option("--stats", genStats);
  gu->add_option("--min-size", params.minSize);
  gu->add_option("--max-size", params.maxSize);
  gu->add_option("--max-countables", params.maxCountables);
  gu->add_option("--max-uncountables", params.maxUncountables);
  gu->add_option("--low-cut-pct", params.lowCutPct);
  gu->add_option("--attempts", params.attemptBudget);

  // validate-cond
  std::string vcU, vcC, vcKind = "p", vcOut;
  auto* vc = app.add_subcommand("validate-cond", "validate a condition document");
  vc->add_option("--universe", vcU)->required();
  vc->add_option("--cond", vcC)->required();
  vc->add_option("--kind", vcKind)->check(CLI::IsMember({"p", "q"}));
  vc->add_option("--out", vcOut);

  // restrict
  std::string rsU, rsC, rsModel, rsKind = "p", rsOut;
  auto* rs = app.add_subcommand("restrict", "restrict a condition to a model");
  rs->add_option("--universe", rsU)->required();
  rs->add_option("--cond", rsC)->required();
  rs->add_option("--model", rsModel)->required();
  rs->add_option("--kind", rsKind)->check(CLI::IsMember({"p", "q"}));
  rs->add_option("--out", rsOut);

  // amalgamate
  std::string amMode, amU, amR, amW, amModel, amOut;
  auto* am = app.add_subcommand("amalgamate", "amalgamate w with r over a model");
  am->add_option("--mode", amMode)
      ->required()
      ->check(CLI::IsMember({"countable", "uncountable", "product"}));
  am->add_option("--universe", amU)->required();
  am->add_option("--r", amR)->required();
  am->add_option("--w", amW)->required();
  am->add_option("--model", amModel)->required();
  am->add_option("--out", amOut);

  // project
  std::string pjU, pjC, pjOut;
  uint32_t pjIndex = 0;
  auto* pj = app.add_subcommand("project", "project a product condition to a coordinate");
  pj->add_option("--universe", pjU)->required();
  pj->add_option("--cond", pjC)->required();
  pj->add_option("--index", pjIndex)->required();
  pj->add_option("--out", pjOut);

  // check
  std::string ckProp, ckOut, ckReplay;
  uint64_t ckSeed = 0;
  uint32_t ckTrials = 200, ckJobs = 1;
  int64_t ckFloor = -1;
  auto* ck = app.add_subcommand("check", "run one property of the catalog");
  ck->add_option("property", ckProp)->required();
  ck->add_option("--seed", ckSeed);
  ck->add_option("--trials", ckTrials);
  ck->add_option("--premise-floor", ckFloor);
  ck->add_option("--jobs", ckJobs);
  ck->add_option("--out", ckOut);
  ck->add_option("--replay", ckReplay);

  // fuzz-all
  uint64_t fzSeed = 0;
  uint32_t fzTrials = 100, fzJobs = 1;
  std::string fzOut;
  auto* fz = app.add_subcommand("fuzz-all", "run the whole property catalog");
  fz->add_option("--seed", fzSeed)->required();
  fz->add_option("--trials", fzTrials);
  fz->add_option("--jobs", fzJobs);
  fz->add_option("--out", fzOut);

  // report
  std::string rpFile;
  auto* rp = app.add_subcommand("report", "render a check report as a table");
  rp->add_option("file", rpFile)->required();

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (vu->parsed()) return cmdValidateUniverse(vuFile, vuOut, out);
    if (gu->parsed()) return cmdGenUniverse(genSeed, params, genOut, genStats, out);
    if (vc->parsed()) return cmdValidateCond(vcU, vcC, vcKind, vcOut, out);
    if (rs->parsed()) return cmdRestrict(rsU, rsC, rsModel, rsKind, rsOut, out);
    if (am->parsed()) return cmdAmalgamate(amMode, amU, amR, amW, amModel, amOut, out);
    if (pj->parsed()) return cmdProject(pjU, pjC, pjIndex, pjOut, out);
    if (ck->parsed()) {
      if (ckReplay.empty() && !ck->count("--seed"))
        fail(Errc::ParseError, "check requires --seed");
      return cmdCheck(ckProp, ckSeed, ckTrials, ckFloor, ckJobs, ckOut, ckReplay, out, err);
    }
    if (fz->parsed()) return cmdFuzzAll(fzSeed, fzTrials, fzJobs, fzOut, out, err);
    if (rp->parsed()) return cmdReport(rpFile, out);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    err << "ParseError: " << e.what() << "\n";
    return 2;
  }
  err << "no subcommand\n";
  return 2;
}

}  // namespace scf::cli
