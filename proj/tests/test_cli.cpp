#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifndef YANG_CLI_PATH
#error "YANG_CLI_PATH must point at the command line binary"
#endif

namespace {

namespace fs = std::filesystem;

const fs::path kTmp = "test_cli_tmp";

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run(const std::string& args) {
  static int counter = 0;
  const fs::path out = kTmp / ("out" + std::to_string(counter) + ".txt");
  const fs::path err = kTmp / ("err" + std::to_string(counter) + ".txt");
  ++counter;
  const std::string cmd = std::string("\"") + YANG_CLI_PATH + "\" " + args + " > " +
                          out.string() + " 2> " + err.string();
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

struct TmpDirGuard {
  TmpDirGuard() {
    fs::remove_all(kTmp);
    fs::create_directories(kTmp);
  }
} guard;

}  // namespace

TEST_CASE("verify: relation report on the constraint manifold") {
  RunResult r = run("verify su3 --mu 2 --nu -0.5 --lambda 2");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "\"algebra\": \"su3\""));
  CHECK(contains(r.out, "\"constraint_ok\": true"));
  CHECK(contains(r.out, "\"max_residual\""));
  CHECK(contains(r.out, "\"block_scalars\""));
  CHECK(contains(r.out, "Ibar+"));

  RunResult again = run("verify su3 --mu 2 --nu -0.5 --lambda 2");
  CHECK(again.exit_code == 0);
  CHECK(again.out == r.out);  // byte-identical reruns

  RunResult su2 = run("verify su2 --mu 2 --nu -0.5 --lambda 2");
  CHECK(su2.exit_code == 0);
  CHECK(contains(su2.out, "\"algebra\": \"su2\""));
  CHECK(contains(su2.out, "sum(J^2)-(3/4)*id"));
}

TEST_CASE("verify: error taxonomy maps to exit codes") {
  RunResult degenerate = run("verify su2 --mu 1 --nu -1 --lambda 2");
  CHECK(degenerate.exit_code == 1);
  CHECK(contains(degenerate.err, "error:"));
  CHECK(degenerate.out.empty());

  RunResult singular = run("verify su2 --mu 1 --nu 1 --lambda 2");
  CHECK(singular.exit_code == 2);
  CHECK(contains(singular.err, "error:"));
}

TEST_CASE("spectrum: deformed Cartan eigenvalues") {
  RunResult r = run("spectrum i3 --mu 2 --nu -0.5 --lambda 2");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "\"target\": \"i3\""));
  CHECK(contains(r.out, "-0.5"));
  CHECK(contains(r.out, "0.5"));
  CHECK(contains(r.out, "\"roots\""));
}

TEST_CASE("apply: qubit transitions") {
  RunResult r = run("apply --operator J+ --mu 2 --nu -0.5 --lambda 2 --alpha 1 --beta 0");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "\"entanglement_before\": 1"));
  CHECK(contains(r.out, "\"entanglement_after\": 0.8"));
  CHECK(contains(r.out, "\"annihilated\": false"));

  // Complex amplitude parsing: |0.6|^2 + |0.8i|^2 = 1, concurrence 1.
  RunResult c = run(
      "apply --operator J+ --mu 2 --nu -0.5 --lambda 2 --alpha 0.6 --beta 0.8i");
  CHECK(c.exit_code == 0);
  CHECK(contains(c.out, "\"entanglement_before\": 1"));

  RunResult bad = run(
      "apply --operator J+ --mu 2 --nu -0.5 --lambda 2 --alpha 0.5 --beta 0.5");
  CHECK(bad.exit_code == 1);
  CHECK(contains(bad.err, "error:"));

  RunResult unknown = run(
      "apply --operator Z9 --mu 2 --nu -0.5 --lambda 2 --alpha 1 --beta 0");
  CHECK(unknown.exit_code == 1);
}

TEST_CASE("apply: qutrit transitions name decay channels") {
  RunResult r = run(
      "apply --operator Itilde3 --mu 2 --nu -0.5 --lambda 2 --alpha1 0.8 --alpha2 0.6");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "\"channels\""));
  CHECK(contains(r.out, "\"pi0\""));
  CHECK(contains(r.out, "\"entanglement_after\": 0.630929753571"));

  RunResult annihilating = run(
      "apply --operator Ibar+ --mu 2 --nu -0.5 --lambda 2 --alpha1 0.8 --alpha2 0.6");
  CHECK(annihilating.exit_code == 0);
  CHECK(contains(annihilating.out, "\"annihilated\": false"));
  CHECK(contains(annihilating.out, "\"pi-\""));

  // Raw amplitude entry for qutrits.
  RunResult amps = run(
      "apply --operator Itilde+ --mu 2 --nu -0.5 --lambda 2 "
      "--amps 0.57735026918963,0,0,0,0.57735026918963,0,0,0,0.57735026918963");
  CHECK(amps.exit_code == 0);
  CHECK(contains(amps.out, "\"entanglement_before\": 1"));
}

TEST_CASE("sweep: csv table with omission note") {
  RunResult r = run("sweep c1 --lambda 2 --mu-min 0 --mu-max 2 --steps 199");
  CHECK(r.exit_code == 0);
  int lines = 0;
  for (char ch : r.out)
    if (ch == '\n') ++lines;
  CHECK(lines == 200);  // header plus one row per grid point
  CHECK(r.out.rfind("mu,c1\n", 0) == 0);
  CHECK(r.err.empty());

  RunResult again = run("sweep c1 --lambda 2 --mu-min 0 --mu-max 2 --steps 199");
  CHECK(again.out == r.out);

  RunResult wide = run("sweep c1 --lambda 2 --mu-min 0.01 --mu-max 3.99 --steps 200");
  CHECK(wide.exit_code == 0);
  CHECK(contains(wide.err, "omitted 100"));

  RunResult empty = run("sweep c1 --lambda 2 --mu-min 5 --mu-max 6 --steps 10");
  CHECK(empty.exit_code == 1);
}

TEST_CASE("tables: decay channel summary") {
  const std::string args =
      "tables --mu 2 --nu -0.5 --lambda 2 --alpha1 0.8 --alpha2 0.6";
  RunResult r = run(args);
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "pi+pi-"));
  CHECK(contains(r.out, "K0Kbar0"));
  CHECK(contains(r.out, "K+K-"));
  CHECK(contains(r.out, "eta0eta0'"));
  CHECK(contains(r.out, "0.630929753571"));
  CHECK(contains(r.out, "general family"));
  CHECK(contains(r.out, "reduced family"));
  CHECK(contains(r.out, "| operator |"));

  RunResult again = run(args);
  CHECK(again.out == r.out);
}

TEST_CASE("--out writes atomically and never leaves partial files") {
  const fs::path target = kTmp / "report.json";
  RunResult r = run("verify su2 --mu 2 --nu -0.5 --lambda 2 --out " + target.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  REQUIRE(fs::exists(target));
  CHECK(contains(slurp(target), "max_residual"));

  const fs::path missing = kTmp / "never.json";
  RunResult fail = run("verify su2 --mu 1 --nu -1 --lambda 2 --out " + missing.string());
  CHECK(fail.exit_code == 1);
  CHECK_FALSE(fs::exists(missing));
}

TEST_CASE("argument errors exit with code 1") {
  CHECK(run("verify su2 --mu 1 --nu 1").exit_code == 1);      // missing --lambda
  CHECK(run("verify su4 --mu 1 --nu 1 --lambda 1").exit_code == 1);
  CHECK(run("verify su2 --mu 1 --nu 1 --lambda 1 --bogus").exit_code == 1);
  CHECK(run("").exit_code == 1);  // a subcommand is required
  CHECK(run("--help").exit_code == 0);
}
