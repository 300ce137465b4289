// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria AC1-AC3 pin the bundled fixtures, AC4-AC7 run the
// property catalog at scale, AC8 compares the optimized operators against the
// straight-line oracle over an exhaustive enumeration, AC9-AC10 pin the
// serialization and determinism contracts.

#include <chrono>
#include <iostream>
#include <sstream>

#include "cli.hpp"
#include "oracle/oracle.hpp"
#include "scf/fixtures.hpp"
#include "scf/harness/enumerate.hpp"
#include "scf/harness/runner.hpp"
#include "scf/json_io.hpp"

using namespace scf;
using namespace scf::harness;

namespace {

int failures = 0;

struct Criterion {
  std::string id;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;

  explicit Criterion(std::string name) : id(std::move(name)) {}

  void require(bool cond, const std::string& why) {
    if (!cond && ok) {
      ok = false;
      detail = why;
    }
  }

  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }

  void finish(double budgetMs = 0) {
    double elapsed = ms();
    if (budgetMs > 0 && elapsed > budgetMs) {
      ok = false;
      detail = "over time budget: " + std::to_string(elapsed) + " ms";
    }
    std::cout << id << ": " << (ok ? "PASS" : "FAIL") << " (" << static_cast<long>(elapsed)
              << " ms)" << (ok ? "" : " -- " + detail) << "\n"
              << std::flush;
    failures += ok ? 0 : 1;
  }
};

std::set<std::string> failedAxioms(const Universe& u) {
  std::set<std::string> out;
  for (const auto& e : validateUniverse(u).entries)
    if (!e.passed) out.insert(e.axiom);
  return out;
}

void ac1() {
  Criterion c("AC1 fixture universe validation and mutant rejection");
  c.require(validateUniverse(fixtures::u1()).allPassed(), "fixture failed the ledger");

  using Mutation = std::function<void(Universe&)>;
  std::vector<std::pair<std::set<std::string>, Mutation>> mutants = {
      {{"A1"}, [](Universe& u) { u.config.omega1Cut = 0; }},
      {{"A1"},
       [](Universe& u) {
         CountableModel clone = u.countable("M0");
         clone.id = "M0b";
         u.countables["M0b"] = clone;
       }},
      {{"A2"},
       [](Universe& u) {
         CountableModel mx;
         mx.id = "MX";
         mx.trace = TraceSet({0, 1, 2, 13, 37});
         mx.indexSet = {0, 1};
         u.countables["MX"] = mx;
       }},
      {{"A6"}, [](Universe& u) { u.config.lambdaSet = {12, 20, 28, 36}; }},
      {{"A7"},
       [](Universe& u) {
         u.countables["N"].setFamily.insert(TraceSet({0, 1, 2, 3, 4, 5, 6, 13, 14}));
       }},
      {{"A7"}, [](Universe& u) { u.countables["N"].setFamily.erase(TraceSet({0})); }},
      {{"A8"}, [](Universe& u) { u.countables["M0"].modelFamily.insert("M2"); }},
      {{"A9"}, [](Universe& u) { u.countables["M2"].indexSet = {0}; }},
      {{"A10"}, [](Universe& u) { u.countables["N"].modelFamily.erase("M0"); }},
      {{"A11", "A13"}, [](Universe& u) { u.countables["N"].setFamily.clear(); }},
      {{"A14"}, [](Universe& u) { u.config.stationaryFamily[1] = {20}; }},
  };
  c.require(mutants.size() >= 8, "not enough documented mutants");
  for (size_t i = 0; i < mutants.size(); ++i) {
    Universe u = fixtures::u1();
    mutants[i].second(u);
    auto failed = failedAxioms(u);
    for (const auto& want : mutants[i].first) {
      c.require(failed.count(want) != 0,
                "mutant " + std::to_string(i) + " missing predicted " + want);
    }
  }
  c.finish(1000);
}

void ac2() {
  Criterion c("AC2 fixture condition validation and clause mutants");
  Universe u = fixtures::u1();
  Universe u2 = fixtures::u2();
  PCondition p1 = fixtures::p1(u);
  c.require(validateP(u, p1).empty(), "fixture condition rejected");

  auto clauses = [](const Universe& uni, const PCondition& p) {
    std::set<std::string> out;
    for (const auto& v : validateP(uni, p)) out.insert(v.clause);
    return out;
  };
  TraceSet n20 = u.countable("N").trace.restrictBelow(Ord::fin(20));
  TraceSet m020 = u.countable("M0").trace.restrictBelow(Ord::fin(20));

  {
    PCondition p;
    p.a = {"M0", "M3"};
    p.normalize(u2);
    c.require(clauses(u2, p) == std::set<std::string>{"C1"}, "C1 mutant impure");
  }
  {
    PCondition p = p1;
    p.f[DomainElement::setElem(TraceSet({0, 1, 2, 13}))] = {};
    p.normalize(u);
    c.require(clauses(u, p) == std::set<std::string>{"C2"}, "C2 mutant impure");
  }
  {
    PCondition p = p1;
    p.f.erase(DomainElement::setElem(n20));
    p.normalize(u);
    c.require(clauses(u, p) == std::set<std::string>{"C3"}, "C3 mutant impure");
  }
  {
    PCondition p = p1;
    p.g[GKey{n20, DomainElement::ordS(20)}] = {13};
    p.normalize(u);
    c.require(clauses(u, p) == std::set<std::string>{"C4"}, "C4 mutant impure");
  }
  {
    PCondition p = fixtures::amalgamExpected(u);
    p.g[GKey{m020, DomainElement::ordS(20)}] = {15};
    p.normalize(u);
    c.require(clauses(u, p) == std::set<std::string>{"C5"}, "C5 mutant impure");
  }
  {
    PCondition p = p1;
    p.f[DomainElement::ordS(20)] = {};
    p.g.clear();
    p.normalize(u);
    c.require(clauses(u, p) == std::set<std::string>{"C6"}, "C6 mutant impure");
  }
  {
    PCondition p;
    p.a = {"M0", "M2"};
    p.normalize(u);
    c.require(clauses(u, p) == std::set<std::string>{"C7"}, "C7 mutant impure");
  }
  c.finish(1000);
}

void ac3() {
  Criterion c("AC3 golden amalgam reproduces the worked example");
  Universe u = fixtures::u1();
  PCondition r = fixtures::p1(u);
  PCondition w = fixtures::amalgamW(u);
  PCondition out = amalgCountable(u, w, r, "N");
  c.require(canonicalDump(toJson(out)) == canonicalDump(toJson(fixtures::amalgamExpected(u))),
            "serialized amalgam differs from the hand-derived document");
  c.require(validateP(u, out).empty(), "amalgam fails validation");
  c.require(leqP(u, out, w), "amalgam not below w");
  c.require(leqP(u, out, r), "amalgam not below r");
  c.finish();
}

void runScaled(Criterion& c, const std::string& id, uint32_t trials, uint32_t floor) {
  CheckOutcome o = runProperty(id, 2027, trials, floor, 4);
  c.require(o.failures == 0, id + " had failures");
  c.require(!o.vacuous, id + " vacuous: " + std::to_string(o.premiseHits) + " < " +
                            std::to_string(floor));
}

void ac4() {
  Criterion c("AC4 amalgamation soundness at scale");
  for (const char* id : {"P-6.15", "P-11.16", "P-11.18"}) runScaled(c, id, 1000, 300);
  // The countable amalgam must exercise the whole seven-way case analysis.
  CheckOutcome o = runProperty("P-7.19", 2027, 1000, 300, 4);
  c.require(o.failures == 0, "P-7.19 had failures");
  c.require(!o.vacuous, "P-7.19 vacuous");
  for (const char* cs : {"amalg-case1", "amalg-case2", "amalg-case3", "amalg-case4",
                         "amalg-case5", "amalg-case6", "amalg-case7"})
    c.require(o.counters[cs] > 0, std::string(cs) + " never reached");
  c.finish(120000);
}

void ac5() {
  Criterion c("AC5 commuting identities");
  runScaled(c, "P-8.6", 500, 100);
  runScaled(c, "P-12.6", 500, 100);
  c.finish();
}

void ac6() {
  Criterion c("AC6 remainder additivity");
  runScaled(c, "P-3.5", 1000, 200);
  runScaled(c, "P-3.8", 1000, 200);
  runScaled(c, "P-10.13", 1000, 300);
  c.finish();
}

void ac7() {
  Criterion c("AC7 monotonicity and exchange laws");
  runScaled(c, "P-8.1", 500, 150);
  runScaled(c, "P-12.1", 500, 150);
  runScaled(c, "P-8.4", 500, 150);
  runScaled(c, "P-11.17", 500, 150);
  runScaled(c, "P-12.4", 500, 150);
  c.finish();
}

void checkOracleAgreement(Criterion& c, const Universe& u) {
  EnumBounds bounds;
  bounds.maxA = 2;
  bounds.maxDom = 3;
  bounds.maxGSize = 1;

  OrdVec sset = u.unionStationary();
  std::vector<PCondition> all;
  std::vector<PCondition> kept;
  uint64_t count = 0;
  enumerateConditions(u, StationaryRef::unionSet(), bounds, [&](const PCondition& p) {
    ++count;
    all.push_back(p);
    // The straight-line interpreter accepts exactly what the validator does.
    c.require(oracle::validateP(u, p).empty(), "oracle rejects a valid condition");
    if (count % 7 == 0) kept.push_back(p);

    // Fresh-trace facts: traces of side-condition models at fresh stationary
    // ordinals stay outside the domain, outside smaller models, and are
    // pairwise distinct; the case-4 witness is unique.
    OrdVec fresh = ords::diff(sset, p.domOrds());
    for (const auto& mId : p.a) {
      const auto& m = u.countable(mId);
      for (uint32_t alpha : fresh) {
        if (!m.trace.contains(alpha)) continue;
        TraceSet t = m.trace.restrictBelow(Ord::fin(alpha));
        c.require(!p.hasSet(t), "fresh trace collides with the domain");
        for (const auto& nId : p.a) {
          const auto& n = u.countable(nId);
          if (lessOrEquiv(compare(u, n, m)))
            c.require(!memSet(u, t, n), "fresh trace inside a smaller model");
          for (uint32_t beta0 : fresh) {
            if (beta0 == alpha || !n.trace.contains(beta0)) continue;
            c.require(t != n.trace.restrictBelow(Ord::fin(beta0)),
                      "fresh traces at distinct ordinals coincide");
          }
        }
      }
    }
    for (const auto& nId : p.a) {
      const auto& n = u.countable(nId);
      for (const auto& [x, chain] : p.f) {
        uint32_t hits = 0;
        for (uint32_t alpha : p.domOrds()) {
          if (!n.trace.contains(alpha)) continue;
          TraceSet cut = n.trace.restrictBelow(Ord::fin(alpha));
          bool hit = (!x.isOrd() && x.set() == cut) ||
                     std::find(chain.begin(), chain.end(), cut) != chain.end();
          hits += hit ? 1 : 0;
        }
        c.require(hits <= 1, "several ordinals witness one model cut");
      }
    }
    return c.ok;
  });
  c.require(count > 0, "enumeration emitted nothing");

  // Order agreement over every enumerated pair.
  for (const auto& p : all) {
    for (const auto& q : all) {
      if (oracle::leqP(u, p, q) != leqP(u, p, q)) {
        c.require(false, "leq disagreement");
        break;
      }
    }
    if (!c.ok) break;
  }

  // Restrictions agree for every enumerated condition in a dense class.
  for (const auto& p : all) {
    for (const auto& [nId, n] : u.countables) {
      if (!n.simple || !inDN(u, p, nId)) continue;
      c.require(restrictToCountable(u, p, nId) == oracle::restrictToCountable(u, p, nId),
                "countable restriction disagreement");
    }
    for (const auto& [qId, q] : u.uncountables) {
      if (!q.simple || !inDQ(u, p, qId)) continue;
      c.require(restrictToUncountable(u, p, qId) == oracle::restrictToUncountable(u, p, qId),
                "uncountable restriction disagreement");
    }
    if (!c.ok) break;
  }

  // Verdict agreement on mutated (usually invalid) conditions.
  for (const auto& p : kept) {
    std::vector<PCondition> mutated;
    {
      PCondition m = p;
      if (!m.f.empty()) {
        m.f.begin()->second.clear();
        mutated.push_back(m);
      }
    }
    {
      PCondition m = p;
      m.a.clear();
      mutated.push_back(m);
    }
    {
      PCondition m = p;
      if (!m.f.empty() && !m.f.begin()->second.empty()) {
        GKey key{m.f.begin()->second.front(), m.f.begin()->first};
        m.g[key] = {0};
        mutated.push_back(m);
      }
    }
    for (const auto& m : mutated) {
      std::set<std::string> fast;
      for (const auto& v : validateP(u, m)) fast.insert(v.clause);
      c.require(fast == oracle::validateP(u, m), "clause verdicts disagree on a mutant");
    }
  }

  // Remainder data over every small adequate subset.
  std::vector<ModelId> ids;
  for (const auto& [id, _] : u.countables) ids.push_back(id);
  size_t n = std::min<size_t>(ids.size(), 12);
  for (uint64_t mask = 0; mask < (1ull << n); ++mask) {
    std::set<ModelId> a;
    for (size_t i = 0; i < n; ++i)
      if (mask & (1ull << i)) a.insert(ids[i]);
    if (a.size() > 3) continue;
    c.require(oracle::rStar(u, a) == rStar(u, a), "r* disagreement");
    c.require(oracle::sStar(u, a) == sStar(u, a), "s* disagreement");
    for (const auto& mi : a)
      for (const auto& ni : a)
        c.require(oracle::compare(u, mi, ni) == compare(u, u.countable(mi), u.countable(ni)),
                  "comparison disagreement");
  }
}

void ac8() {
  Criterion c("AC8 oracle equivalence over exhaustive enumeration");
  checkOracleAgreement(c, fixtures::u1());
  // Two generated universes with at most three countable models.
  GenParams params;
  int found = 0;
  for (uint64_t seed = 1; seed <= 400 && found < 2; ++seed) {
    Universe u = generateUniverse(seed, params);
    if (u.countables.size() > 3) continue;
    ++found;
    checkOracleAgreement(c, u);
  }
  c.require(found == 2, "no small generated universes found");
  c.finish(600000);
}

void ac9() {
  Criterion c("AC9 canonical serialization round-trips byte-exactly");
  Universe u1 = fixtures::u1();
  auto roundTrip = [&c](const json& doc, const char* what) {
    std::string bytes = canonicalDump(doc);
    json back = json::parse(bytes);
    c.require(canonicalDump(back) == bytes, std::string("round trip changed ") + what);
    return back;
  };
  c.require(canonicalDump(toJson(universeFromJson(roundTrip(toJson(u1), "u1")))) ==
                canonicalDump(toJson(u1)),
            "u1 reparse differs");
  c.require(canonicalDump(toJson(pconditionFromJson(roundTrip(toJson(fixtures::p1(u1)),
                                                              "p1")))) ==
                canonicalDump(toJson(fixtures::p1(u1))),
            "p1 reparse differs");
  c.require(canonicalDump(toJson(qconditionFromJson(roundTrip(toJson(fixtures::q1(u1)),
                                                              "q1")))) ==
                canonicalDump(toJson(fixtures::q1(u1))),
            "q1 reparse differs");

  GenParams params;
  SplitMix64 rng(20270809);
  for (int i = 0; i < 100; ++i) {
    Universe u = generateUniverse(rng.next(), params);
    std::string ub = canonicalDump(toJson(u));
    c.require(canonicalDump(toJson(universeFromJson(json::parse(ub)))) == ub,
              "generated universe round trip");
    PCondition p = buildP(u, StationaryRef::unionSet(), rng, 5);
    std::string pb = canonicalDump(toJson(p));
    c.require(canonicalDump(toJson(pconditionFromJson(json::parse(pb)))) == pb,
              "generated condition round trip");
    QCondition q = buildQ(u, rng, 3);
    std::string qb = canonicalDump(toJson(q));
    c.require(canonicalDump(toJson(qconditionFromJson(json::parse(qb)))) == qb,
              "generated product condition round trip");
  }
  c.finish();
}

void ac10() {
  Criterion c("AC10 check reports are byte-identical across runs and job counts");
  auto invoke = [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int status = scf::cli::run(args, out, err);
    return std::make_pair(status, out.str());
  };
  for (const auto& [prop, trials] :
       std::vector<std::pair<std::string, std::string>>{
           {"P-8.6", "500"}, {"P-7.19", "120"}, {"P-10.13", "120"}}) {
    auto a = invoke({"check", prop, "--seed", "7", "--trials", trials});
    auto b = invoke({"check", prop, "--seed", "7", "--trials", trials});
    auto jobs3 = invoke({"check", prop, "--seed", "7", "--trials", trials, "--jobs", "3"});
    auto jobs8 = invoke({"check", prop, "--seed", "7", "--trials", trials, "--jobs", "8"});
    c.require(a.first == 0, prop + " check failed");
    c.require(a.second == b.second, prop + " repeat run differs");
    c.require(a.second == jobs3.second, prop + " jobs=3 differs");
    c.require(a.second == jobs8.second, prop + " jobs=8 differs");
  }
  c.finish();
}

}  // namespace

int main() {
  ac1();
  ac2();
  ac3();
  ac4();
  ac5();
  ac6();
  ac7();
  ac8();
  ac9();
  ac10();
  std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed"
                              : "ACCEPTANCE: " + std::to_string(failures) + " criteria failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}
