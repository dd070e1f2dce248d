#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

// run the CLI with stderr folded into stdout
RunResult run(const std::string &args) {
  std::string cmd = std::string(FSD_CLI_PATH) + " " + args + " 2>&1";
  FILE *pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), got);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

bool contains(const std::string &hay, const std::string &needle) {
  return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("verify verdicts map to exit codes and golden lines") {
  RunResult t = run("verify --group Z4 --pairing standard --set \"{0,1}\"");
  CHECK(t.exit_code == 0);
  CHECK(t.output == "formally self dual: true\n");

  RunResult f = run("verify --group Z9 --set \"{0,1,2}\"");
  CHECK(f.exit_code == 1);
  CHECK(f.output == "formally self dual: false\n");

  RunResult pair = run("verify --group Z4 --set \"{0}\" --set-t \"{0,1,2,3}\"");
  CHECK(pair.exit_code == 0);
  CHECK(pair.output == "formally dual pair: true\n");
}

TEST_CASE("malformed input exits with code two") {
  CHECK(run("verify --group Zbad --set \"{0}\"").exit_code == 2);
  CHECK(run("verify --group Z4 --set \"{(0,1)}\"").exit_code == 2);
  CHECK(run("verify --group Z4 --set \"{}\"").exit_code == 2);
  CHECK(run("verify --group Z4").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("--no-verify-exact verify --group Z4 --set \"{0,1}\"").exit_code ==
        2);
}

TEST_CASE("gold scan table") {
  RunResult r = run("boolfn gold-scan --n 3,5,7");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "n i fsd\n"));
  CHECK(contains(r.output, "3 1 true\n"));
  CHECK(contains(r.output, "3 2 true\n"));
  CHECK(contains(r.output, "5 1 false\n"));
  CHECK(contains(r.output, "7 6 false\n"));
  CHECK_FALSE(contains(r.output, "5 1 true"));
}

TEST_CASE("MacWilliams transform of the F_3^4 example") {
  RunResult r = run(std::string("codes macwilliams --input ") + FSD_DATA_DIR +
                    "/f3_example.code --q 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "X^4 + 4/3*X^3*Y + 4*X*Y^3 + 8/3*Y^4\n");
}

TEST_CASE("construction bundles pipe into the verifier") {
  for (const char *c : {"tito", "lattice --n 3", "gaussian --p 5 --alpha 2",
                        "shds --p 3 --m 1 --alpha 1 --beta 2",
                        "sporadic --index 0", "sporadic --index 1"}) {
    std::string cmd = std::string("construct ") + c + " | " + FSD_CLI_PATH +
                      " verify --bundle -";
    RunResult r = run(cmd);
    CHECK(r.exit_code == 0);
    CHECK(r.output == "formally self dual: true\n");
  }
}

TEST_CASE("reduction report") {
  RunResult r = run("reduce --group Z4 --set \"{1,3}\"");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "final group: Z1\n"));
  CHECK(contains(r.output, "final set: {0}\n"));
  // a non self dual input cannot be reduced
  CHECK(run("reduce --group Z9 --set \"{0,1,2}\"").exit_code == 2);
}

TEST_CASE("even set report with the zero sum check") {
  RunResult r = run("evenset --group Z4 --set \"{0,1}\" --pairing standard");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "even: true\n"));
  CHECK(contains(r.output, "zero sum check (formally self dual): true\n"));

  RunResult odd = run("evenset --group Z7 --set \"{0,1,2}\"");
  CHECK(odd.exit_code == 1);
  CHECK(odd.output == "even: false\n");
}

TEST_CASE("search output lists hits with primitivity tags") {
  RunResult r = run("search --group Z4 --size 2");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "hit: {0,1} primitive\n"));
  CHECK(contains(r.output, "hit: {0,2} not primitive\n"));
  CHECK(contains(r.output, "hit: {0,3} primitive\n"));
  CHECK(contains(r.output, "complete: true\n"));

  RunResult all = run("search --group Z4 --size 2 --pairing all");
  CHECK(all.exit_code == 0);
  CHECK(contains(all.output, "pairing: [[1]]\n"));
  CHECK(contains(all.output, "pairing: [[3]]\n"));

  RunResult budget = run("search --group Z16 --size 4 --budget-nodes 3");
  CHECK(budget.exit_code == 1);
  CHECK(contains(budget.output, "complete: false\n"));
}

TEST_CASE("json sidecar output is well formed") {
  RunResult r = run("--format json verify --group Z4 --set \"{0,1}\"");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "\"verdict\": true"));
  CHECK(contains(r.output, "\"size_condition\": true"));
  CHECK(contains(r.output, "\"nu\": 2"));

  RunResult s = run("--format json search --group Z4 --size 2");
  CHECK(s.exit_code == 0);
  CHECK(contains(s.output, "\"complete\": true"));
  CHECK(contains(s.output, "\"primitive\": false"));
}
