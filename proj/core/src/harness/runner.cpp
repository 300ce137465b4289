#include "scf/harness/runner.hpp"

#include <chrono>
#include <thread>

#include "scf/fixtures.hpp"
#include "scf/harness/shrink.hpp"

namespace scf::harness {

namespace {

struct Partial {
  uint32_t premiseHits = 0;
  uint32_t failures = 0;
  std::optional<uint32_t> firstFailTrial;
  Bundle firstFailBundle;
  std::string firstFailNote;
  Counters counters;
};

void runRange(const PropertyDef& def, uint64_t seed, uint32_t lo, uint32_t hi,
              const GenParams& params, Partial& out) {
  for (uint32_t t = lo; t < hi; ++t) {
    uint64_t trialSeed = SplitMix64::forTrial(seed, t).next();
    Bundle bundle = def.generate(trialSeed, params);
    EvalResult res;
    try {
      res = def.eval(bundle);
    } catch (const Error& e) {
      res = EvalResult::bad(std::string("unexpected error: ") + e.what());
    }
    if (res.premise) ++out.premiseHits;
    for (const auto& [k, v] : res.counters) out.counters[k] += v;
    if (res.premise && !res.pass) {
      ++out.failures;
      if (!out.firstFailTrial || t < *out.firstFailTrial) {
        out.firstFailTrial = t;
        out.firstFailBundle = std::move(bundle);
        out.firstFailNote = res.note;
      }
    }
  }
}

json environmentJson(const GenParams& p) {
  Universe u1 = fixtures::u1();
  json bounds{{"maxCountables", p.maxCountables}, {"maxLambda", p.maxLambda},
              {"maxLambdaStar", p.maxLambdaStar}, {"maxSize", p.maxSize},
              {"maxUncountables", p.maxUncountables}, {"minSize", p.minSize}};
  json fixturesJ{{"p1", contentHash(toJson(fixtures::p1(u1)))},
                 {"q1", contentHash(toJson(fixtures::q1(u1)))},
                 {"u1", contentHash(toJson(u1))}};
  return json{{"bounds", bounds}, {"fixtures", fixturesJ}};
}

}  // namespace

uint32_t defaultFloor(const std::string& id, uint32_t trials) {
  const PropertyDef& def = property(id);
  uint32_t floor = static_cast<uint32_t>(
      (static_cast<uint64_t>(trials) * def.defaultFloorPct) / 100);
  return trials == 0 ? 0 : std::max<uint32_t>(floor, 1);
}

CheckOutcome runProperty(const std::string& id, uint64_t seed, uint32_t trials,
                         uint32_t premiseFloor, uint32_t jobs, const GenParams& params) {
  return runPropertyDef(property(id), seed, trials, premiseFloor, jobs, params);
}

CheckOutcome runPropertyDef(const PropertyDef& def, uint64_t seed, uint32_t trials,
                            uint32_t premiseFloor, uint32_t jobs, const GenParams& params) {
  auto start = std::chrono::steady_clock::now();

  uint32_t nJobs = std::max<uint32_t>(1, jobs);
  nJobs = std::min(nJobs, std::max<uint32_t>(1, trials));
  std::vector<Partial> parts(nJobs);
  if (nJobs == 1) {
    runRange(def, seed, 0, trials, params, parts[0]);
  } else {
    std::vector<std::thread> threads;
    uint32_t chunk = (trials + nJobs - 1) / nJobs;
    for (uint32_t j = 0; j < nJobs; ++j) {
      uint32_t lo = j * chunk, hi = std::min(trials, lo + chunk);
      if (lo >= hi) break;
      threads.emplace_back(
          [&, j, lo, hi] { runRange(def, seed, lo, hi, params, parts[j]); });
    }
    for (auto& th : threads) th.join();
  }

  Partial total;
  for (auto& p : parts) {
    total.premiseHits += p.premiseHits;
    total.failures += p.failures;
    for (const auto& [k, v] : p.counters) total.counters[k] += v;
    if (p.firstFailTrial &&
        (!total.firstFailTrial || *p.firstFailTrial < *total.firstFailTrial)) {
      total.firstFailTrial = p.firstFailTrial;
      total.firstFailBundle = std::move(p.firstFailBundle);
      total.firstFailNote = p.firstFailNote;
    }
  }

  CheckOutcome out;
  out.property = def.id;
  out.seed = seed;
  out.trials = trials;
  out.premiseFloor = premiseFloor;
  out.premiseHits = total.premiseHits;
  out.failures = total.failures;
  out.vacuous = trials == 0 || total.premiseHits < premiseFloor;
  out.counters = std::move(total.counters);
  if (total.firstFailTrial) {
    json ce{{"bundle", toJson(total.firstFailBundle)},
            {"note", total.firstFailNote},
            {"trial", *total.firstFailTrial}};
    out.firstCounterexample = ce;
    auto stillFails = [&def](const Bundle& b) {
      try {
        EvalResult r = def.eval(b);
        return r.premise && !r.pass;
      } catch (const Error&) {
        return false;
      }
    };
    Bundle small = shrinkCounterexample(total.firstFailBundle, stillFails);
    out.shrunkCounterexample = json{{"bundle", toJson(small)}};
  }
  out.elapsedMs = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  return out;
}

json reportJson(const CheckOutcome& o) {
  json counters = json::object();
  for (const auto& [k, v] : o.counters) counters[k] = v;
  return json{{"counters", counters},
              {"environment", environmentJson(GenParams{})},
              {"failures", o.failures},
              {"firstCounterexample", o.firstCounterexample ? *o.firstCounterexample : json()},
              {"passed", o.passed()},
              {"premiseFloor", o.premiseFloor},
              {"premiseHits", o.premiseHits},
              {"property", o.property},
              {"seed", o.seed},
              {"shrunkCounterexample",
               o.shrunkCounterexample ? *o.shrunkCounterexample : json()},
              {"trials", o.trials},
              {"vacuous", o.vacuous}};
}

json runAllReport(uint64_t seed, uint32_t trials, uint32_t jobs, const GenParams& params,
                  std::vector<CheckOutcome>* outcomes) {
  json results = json::array();
  bool allPass = true;
  for (const auto& def : catalog()) {
    CheckOutcome o =
        runProperty(def.id, seed, trials, defaultFloor(def.id, trials), jobs, params);
    allPass &= o.passed();
    results.push_back(reportJson(o));
    if (outcomes) outcomes->push_back(std::move(o));
  }
  return json{{"allPass", allPass}, {"results", results}, {"seed", seed}, {"trials", trials}};
}

EvalResult replay(const std::string& id, const Bundle& bundle) {
  return property(id).eval(bundle);
}

}  // namespace scf::harness
