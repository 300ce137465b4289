#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "scf/harness/bundle.hpp"
#include "scf/fixtures.hpp"
#include "scf/json_io.hpp"

using namespace scf;
namespace fs = std::filesystem;

namespace {

struct Workdir {
  fs::path dir;
  Workdir() {
    dir = fs::temp_directory_path() / ("scf_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~Workdir() { fs::remove_all(dir); }
  std::string file(const std::string& name, const json& j) {
    std::string p = (dir / name).string();
    saveJsonFile(p, j);
    return p;
  }
  std::string path(const std::string& name) { return (dir / name).string(); }
};

struct Run {
  int status;
  std::string out, err;
};

Run runCli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int status = scf::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("validate-universe reports the ledger") {
  Workdir wd;
  std::string u1 = wd.file("u1.json", toJson(fixtures::u1()));
  Run ok = runCli({"validate-universe", u1});
  CHECK(ok.status == 0);
  CHECK(json::parse(ok.out).at("valid") == true);

  Universe mut = fixtures::u1();
  mut.countables["N"].setFamily.clear();
  std::string bad = wd.file("bad.json", toJson(mut));
  Run fail = runCli({"validate-universe", bad});
  CHECK(fail.status == 1);
  CHECK(json::parse(fail.out).at("valid") == false);

  CHECK(runCli({"validate-universe", wd.path("missing.json")}).status == 2);
  CHECK(runCli({"validate-universe", u1, "--bogus"}).status == 2);
}

TEST_CASE("gen-universe writes a valid document and its statistics") {
  Workdir wd;
  std::string out = wd.path("gen.json"), stats = wd.path("stats.json");
  Run r = runCli({"gen-universe", "--seed", "5", "--out", out, "--stats", stats});
  CHECK(r.status == 0);
  Universe u = universeFromJson(loadJsonFile(out));
  CHECK(validateUniverse(u).allPassed());
  json st = loadJsonFile(stats);
  CHECK(st.at("attempts").get<uint32_t>() >= 1);

  Run again = runCli({"gen-universe", "--seed", "5"});
  CHECK(again.out == r.out);
}

TEST_CASE("validate-cond names the violated clause") {
  Workdir wd;
  Universe u = fixtures::u1();
  std::string uf = wd.file("u1.json", toJson(u));
  std::string pf = wd.file("p1.json", toJson(fixtures::p1(u)));
  CHECK(runCli({"validate-cond", "--universe", uf, "--cond", pf}).status == 0);

  PCondition bad = fixtures::p1(u);
  TraceSet n20 = u.countable("N").trace.restrictBelow(Ord::fin(20));
  bad.g[GKey{n20, DomainElement::ordS(20)}] = {13};
  std::string bf = wd.file("bad.json", toJson(bad));
  Run r = runCli({"validate-cond", "--universe", uf, "--cond", bf});
  CHECK(r.status == 1);
  CHECK(json::parse(r.out).at("violations")[0].at("clause") == "C4");

  std::string qf = wd.file("q1.json", toJson(fixtures::q1(u)));
  CHECK(runCli({"validate-cond", "--universe", uf, "--cond", qf, "--kind", "q"}).status == 0);
}

TEST_CASE("restrict and amalgamate reproduce the worked example") {
  Workdir wd;
  Universe u = fixtures::u1();
  std::string uf = wd.file("u1.json", toJson(u));
  std::string rf = wd.file("p1.json", toJson(fixtures::p1(u)));
  std::string wf = wd.file("w.json", toJson(fixtures::amalgamW(u)));

  Run res = runCli({"restrict", "--universe", uf, "--cond", rf, "--model", "N"});
  CHECK(res.status == 0);
  PCondition restricted = pconditionFromJson(json::parse(res.out));
  CHECK(restricted.f.size() == 1);
  CHECK(restricted.a.empty());

  std::string qf = wd.file("q1.json", toJson(fixtures::q1(u)));
  Run qres = runCli({"restrict", "--universe", uf, "--cond", qf, "--model", "P", "--kind", "q"});
  CHECK(qres.status == 0);
  CHECK(json::parse(qres.out) == toJson(fixtures::q1(u)));

  Run amal = runCli({"amalgamate", "--mode", "countable", "--universe", uf, "--r", rf, "--w",
                  wf, "--model", "N"});
  CHECK(amal.status == 0);
  CHECK(json::parse(amal.out) == toJson(fixtures::amalgamExpected(u)));

  // Bad inputs are input errors.
  CHECK(runCli({"amalgamate", "--mode", "countable", "--universe", uf, "--r", rf, "--w", rf,
             "--model", "N"})
            .status == 2);
}

TEST_CASE("project reads a coordinate") {
  Workdir wd;
  Universe u = fixtures::u1();
  std::string uf = wd.file("u1.json", toJson(u));
  std::string qf = wd.file("q1.json", toJson(fixtures::q1(u)));
  Run r = runCli({"project", "--universe", uf, "--cond", qf, "--index", "0"});
  CHECK(r.status == 0);
  CHECK(json::parse(r.out) == toJson(fixtures::q1(u).fBig.at(0)));
  CHECK(runCli({"project", "--universe", uf, "--cond", qf, "--index", "1"}).status == 2);
}

TEST_CASE("check runs are byte-identical across invocations and job counts") {
  Run a = runCli({"check", "P-2.26", "--seed", "7", "--trials", "25"});
  Run b = runCli({"check", "P-2.26", "--seed", "7", "--trials", "25"});
  Run c = runCli({"check", "P-2.26", "--seed", "7", "--trials", "25", "--jobs", "3"});
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);

  CHECK(runCli({"check", "P-nope", "--seed", "1"}).status == 2);
  CHECK(runCli({"check", "P-2.26"}).status == 2);  // missing --seed
}

TEST_CASE("check --replay re-evaluates a stored counterexample") {
  Workdir wd;
  // A bundle violating the intersection law: B's given set {0,5} is not a
  // subset of B's trace.
  harness::Bundle ce;
  ce.u.config.size = 24;
  ce.u.config.omega1Cut = 4;
  ce.u.config.lambdaSet = {8, 16};
  ce.u.config.lambdaStar = 1;
  ce.u.config.stationaryFamily = {{8}};
  CountableModel a;
  a.id = "A";
  a.trace = TraceSet({0, 5, 9});
  a.indexSet = {0};
  CountableModel b;
  b.id = "B";
  b.trace = TraceSet({0, 1, 10});
  b.indexSet = {0};
  b.setFamily = {TraceSet({0}), TraceSet({0, 5})};
  ce.u.countables = {{"A", a}, {"B", b}};
  std::string cef = wd.file("ce.json", harness::toJson(ce));

  Run r = runCli({"check", "P-2.15", "--replay", cef});
  CHECK(r.status == 1);
  json doc = json::parse(r.out);
  CHECK(doc.at("premise") == true);
  CHECK(doc.at("pass") == false);

  Run again = runCli({"check", "P-2.15", "--replay", cef});
  CHECK(again.out == r.out);
}

TEST_CASE("fuzz-all runs the whole catalog") {
  Workdir wd;
  std::string rep = wd.path("fuzz.json");
  Run r = runCli({"fuzz-all", "--seed", "3", "--trials", "30", "--jobs", "4", "--out", rep});
  CHECK(r.status == 0);
  json doc = loadJsonFile(rep);
  CHECK(doc.at("allPass") == true);
  CHECK(doc.at("results").size() >= 45);
  Run table = runCli({"report", rep});
  CHECK(table.status == 0);
  CHECK(table.out.find("P-12.6") != std::string::npos);
}

TEST_CASE("report renders a table") {
  Workdir wd;
  std::string rep = wd.path("rep.json");
  REQUIRE(runCli({"check", "P-2.26", "--seed", "7", "--trials", "25", "--out", rep}).status ==
          0);
  Run r = runCli({"report", rep});
  CHECK(r.status == 0);
  CHECK(r.out.find("P-2.26") != std::string::npos);
  CHECK(r.out.find("pass") != std::string::npos);

  // A vacuous run renders as such and exits nonzero through report too.
  std::string vac = wd.path("vac.json");
  Run chk = runCli({"check", "P-2.26", "--seed", "7", "--trials", "5", "--premise-floor",
                    "6", "--out", vac});
  CHECK(chk.status == 1);
  Run table = runCli({"report", vac});
  CHECK(table.status == 1);
  CHECK(table.out.find("VACUOUS") != std::string::npos);
}
