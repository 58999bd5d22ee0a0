// End-to-end checks of the command-line surface: exit codes, text output,
// JSON and CSV emission, config-file handling, and determinism. The binary
// path is injected at compile time.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
  std::string cmd;
  if (!env.empty()) cmd += env + " ";
  cmd += "\"" CUSA_CLI_PATH "\" " + args + " 2>&1";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

int count_lines_with(const std::string& hay, const std::string& needle) {
  int n = 0;
  size_t pos = 0, eol;
  while (pos < hay.size()) {
    eol = hay.find('\n', pos);
    if (eol == std::string::npos) eol = hay.size();
    if (hay.substr(pos, eol - pos).find(needle) != std::string::npos) ++n;
    pos = eol + 1;
  }
  return n;
}

// Lines with exactly `commas` comma characters (CSV rows have three).
int count_csv_rows(const std::string& hay, int commas) {
  int n = 0;
  size_t pos = 0, eol;
  while (pos < hay.size()) {
    eol = hay.find('\n', pos);
    if (eol == std::string::npos) eol = hay.size();
    int c = 0;
    for (size_t i = pos; i < eol; ++i) c += hay[i] == ',';
    if (c == commas) ++n;
    pos = eol + 1;
  }
  return n;
}

}  // namespace

TEST_CASE("bare invocation demands a subcommand") {
  RunResult r = run("");
  CHECK(r.code == 2);
}

TEST_CASE("constants subcommand prints the solved thresholds") {
  RunResult r = run("constants");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "p0"));
  CHECK(contains(r.out, "1.42033"));
  CHECK(contains(r.out, "q0"));
  RunResult j = run("constants --json -");
  CHECK(j.code == 0);
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc.contains("solved"));
  CHECK(doc.contains("derived"));
}

TEST_CASE("claims subcommand lists the entire catalog") {
  RunResult r = run("claims");
  CHECK(r.code == 0);
  CHECK(count_lines_with(r.out, " < ") == 48);
  CHECK(contains(r.out, "C-MT5b"));
  RunResult d = run("claims --claim C-MT5b");
  CHECK(d.code == 0);
  CHECK(contains(d.out, "34/35"));
}

TEST_CASE("verify exit codes distinguish pass, fail, and inconclusive") {
  RunResult pass = run("verify --claim C-MC");
  CHECK(pass.code == 0);
  CHECK(contains(pass.out, "status = pass"));

  RunResult fail = run("verify --claim C-MT5b --q 1.1 --seed 7");
  CHECK(fail.code == 1);
  CHECK(contains(fail.out, "status = fail"));

  RunResult inc = run("verify --claim C-ZHU-ii --p 0");
  CHECK(inc.code == 3);
  CHECK(contains(inc.out, "status = inconclusive"));

  RunResult usage = run("verify --claim C-NOPE");
  CHECK(usage.code == 2);
  CHECK(contains(usage.out, "unknown claim id"));
}

TEST_CASE("verify emits a parseable JSON report") {
  RunResult r = run("verify --claim C-MC --grid 64 --random 16 --json -");
  CHECK(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("claim") == "C-MC");
  CHECK(doc.at("status") == "pass");
  CHECK(doc.at("samples") == 80);
  CHECK(doc.at("seed") == 1);
  CHECK(doc.at("min_margin").get<double>() > 0.0);
  CHECK(doc.at("violations").is_array());
  CHECK(doc.at("violations").empty());
}

TEST_CASE("identical seeds give byte-identical reports") {
  const std::string cmd = "verify --claim C-MT4sharp-i --grid 128 --random 64 "
                          "--seed 3 --json -";
  RunResult a = run(cmd);
  RunResult b = run(cmd);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("verify dumps per-sample rows as CSV") {
  RunResult r = run("verify --claim C-MC --grid 64 --random 16 --csv -");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "x,lhs,rhs,margin"));
  CHECK(count_csv_rows(r.out, 3) == 81);  // header plus one row per sample
}

TEST_CASE("probe reports expectation matches and mismatches") {
  RunResult r = run("probe --claim C-MT2c-i --param q --delta 0 --delta 0.01");
  CHECK(r.code == 0);
  CHECK(count_lines_with(r.out, "OK") == 2);
  RunResult none = run("probe --claim C-MC --param q");
  CHECK(none.code == 2);
}

TEST_CASE("a config file supplies sampling defaults; flags override it") {
  const char* path = "cusa_cli_config_test.json";
  {
    std::ofstream out(path);
    out << "{\"grid\": 64, \"random\": 8, \"seed\": 5}\n";
  }
  std::string env = std::string("CUSA_CONFIG=") + path;
  RunResult cfg = run("verify --claim C-MC", env);
  CHECK(cfg.code == 0);
  CHECK(contains(cfg.out, "samples = 72"));
  CHECK(contains(cfg.out, "seed = 5"));
  RunResult over = run("verify --claim C-MC --grid 32", env);
  CHECK(over.code == 0);
  CHECK(contains(over.out, "overrides config grid"));
  CHECK(contains(over.out, "samples = 40"));
  std::remove(path);
}

TEST_CASE("eval, bound, and series answer with branch information") {
  RunResult e = run("eval --fn T --p 1.3 --q 0.8 --x 0.9");
  CHECK(e.code == 0);
  CHECK(contains(e.out, "branch: direct"));
  CHECK(contains(e.out, "region"));
  RunResult b = run("bound --family M_kq --t 0.7 --k 2 --q 1.2");
  CHECK(b.code == 0);
  CHECK(contains(b.out, "0.895783789863826"));
  RunResult s = run("series --name csc --x 1.0");
  CHECK(s.code == 0);
  CHECK(contains(s.out, "abs error"));
}

TEST_CASE("chain, invtrig, and means subcommands verify their statements") {
  RunResult c = run("chain --name final");
  CHECK(c.code == 0);
  CHECK(contains(c.out, "pass"));
  RunResult i = run("invtrig --kind arcsin-halfangle --t 0.5 --p 1 --q 1");
  CHECK(i.code == 0);
  CHECK(contains(i.out, "enclosed"));
  RunResult m = run("means check --a 1 --b 3");
  CHECK(m.code == 0);
  CHECK(contains(m.out, "identities hold"));
}
