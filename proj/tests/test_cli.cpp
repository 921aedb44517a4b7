#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "oneplanar/cli.hpp"

namespace {

struct Result {
  int rc;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  setenv("ONEPLANAR_FIXTURES", ONEPLANAR_FIXTURE_DIR, 1);
  std::istringstream in(input);
  std::ostringstream out, err;
  const int rc = oneplanar::cli::run(args, in, out, err);
  return {rc, out.str(), err.str()};
}

}  // namespace

TEST_CASE("graphs are read from standard input") {
  auto r = run({"lexprod", "--left", "k4.g6", "--right", "2k1.g6"});
  REQUIRE(r.rc == 0);
  auto s = run({"convert", "--to", "edges"}, r.out);
  CHECK(s.rc == 0);
  CHECK(s.out.rfind("8 24\n", 0) == 0);
  CHECK(run({"lexfact", "-"}, "4 3\n0 1\n1 2\n2 3\n").out == "irreducible\n");
  CHECK(run({"lexfact", "-"}, "C~\n").out.rfind("reducible: 1 factorization\n", 0) == 0);
}

TEST_CASE("exit codes") {
  CHECK(run({"check1p", "k2222.g6"}).rc == 0);
  CHECK(run({"check1p", "k7.g6"}).rc == 1);
  CHECK(run({"check1p", "--budget-nodes", "3", "k45.g6"}).rc == 2);
  CHECK(run({"check1p", "--bogus"}).rc == 3);
  CHECK(run({}).rc == 3);
  CHECK(run({"verify"}).rc == 3);
  CHECK(run({"bounds"}).rc == 3);
  CHECK(run({"tight", "--k", "1"}).rc == 3);
  CHECK(run({"--jobs", "0", "bounds", "--n", "5"}).rc == 3);
}

TEST_CASE("diagnostics are one line and name the offset or flag") {
  auto a = run({"check1p", "-"}, "C~~\n");
  CHECK(a.rc == 3);
  CHECK(a.err.find("at byte") != std::string::npos);
  CHECK(std::count(a.err.begin(), a.err.end(), '\n') == 1);
  auto b = run({"bounds", "--n", "5", "--wat"});
  CHECK(b.rc == 3);
  CHECK(b.err.find("--wat") != std::string::npos);
  auto c = run({"validate-drawing", "-"}, "n 2 c 0\nr 0 1\nr 1 9\n");
  CHECK(c.rc == 3);
  CHECK(c.err.find("at byte 14") != std::string::npos);
}

TEST_CASE("help enumerates the subcommands and flags") {
  auto r = run({"--help"});
  CHECK(r.rc == 0);
  for (const char* word : {"lexprod", "lexfact", "check1p", "enumdraw", "genquad", "augment", "skeleton", "validate-drawing", "bounds",
                           "tight", "verify", "iso", "convert", "--budget-nodes", "--budget-seconds", "--jobs", "--format", "--seed"}) {
    CAPTURE(word);
    CHECK(r.out.find(word) != std::string::npos);
  }
  auto g = run({"genquad", "--help"});
  CHECK(g.rc == 0);
  for (const char* word : {"--n", "--oracle", "--augment", "--wheel"}) CHECK(g.out.find(word) != std::string::npos);
}

TEST_CASE("genquad writes augmented drawings") {
  const std::string dir = std::string(ONEPLANAR_TEST_TMP) + "/augment";
  auto r = run({"genquad", "--n", "12", "--augment", dir});
  CHECK(r.rc == 0);
  for (int i = 0; i < 3; ++i) {
    auto v = run({"validate-drawing", "--optimal", dir + "/quad_n12_" + std::to_string(i) + ".1pd"});
    CHECK(v.rc == 0);
  }
}

TEST_CASE("json output parses as a single object") {
  auto r = run({"--format", "json", "check1p", "k33.g6"});
  CHECK(r.rc == 0);
  CHECK(r.out.front() == '{');
  CHECK(r.out.find("\"verdict\": \"yes\"") != std::string::npos);
}

TEST_CASE("verify exit code follows the report") {
  CHECK(run({"verify", "theorem", "--max-n", "9"}).rc == 0);
  CHECK(run({"verify", "lemmas", "--pairs", "3", "--budget-nodes", "1"}).rc == 2);
}
