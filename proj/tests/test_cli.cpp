// Drives the installed binary end to end: exit codes, stdout bytes and the
// stderr summary. LOCUS_CLI_PATH points at the built executable.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// runs through /bin/sh; the command controls its own stderr redirection
RunResult run(const std::string& args, const std::string& env = "") {
  std::string cmd =
      (env.empty() ? "" : env + " ") + std::string(LOCUS_CLI_PATH) + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(TEST_GOLDEN_DIR) + "/" + name,
                   std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::filesystem::path scratch_file(const std::string& name,
                                   const std::string& contents) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path, std::ios::binary);
  out << contents;
  return path;
}

const char* kChain3 = "point a\npoint b\npoint c\nspec a b\nspec b c\n";

}  // namespace

TEST_CASE("figure output matches the library goldens byte for byte") {
  RunResult svg =
      run("inflation --group C5 --normal C5 --primes 2,3 --format svg "
          "--quiet 2>/dev/null");
  CHECK(svg.exit_code == 0);
  CHECK(svg.out == golden("fig1_c5.svg"));

  RunResult dot =
      run("inflation --group D10 --normal G --format dot --quiet 2>/dev/null");
  CHECK(dot.exit_code == 0);
  CHECK(dot.out == golden("fig2_d10.dot"));

  RunResult ascii =
      run("inflation --group D10 --normal G --format ascii --quiet 2>/dev/null");
  CHECK(ascii.exit_code == 0);
  CHECK(ascii.out == golden("fig2_d10.txt"));
}

TEST_CASE("repeated invocations emit identical bytes") {
  const char* cmd = "geomfix --group D10 --normal C5 --quiet 2>/dev/null";
  RunResult first = run(cmd);
  RunResult second = run(cmd);
  CHECK(first.exit_code == 0);
  CHECK(first.out == second.out);
}

TEST_CASE("trivial normal subgroup marks every class as included") {
  RunResult r = run("inflation --group D10 --normal 1 --quiet 2>/dev/null");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("false") == std::string::npos);
  CHECK(r.out.find("\"normal\": \"1\"") != std::string::npos);
}

TEST_CASE("the free locus of D10 against C5 lists exactly 1 and C2") {
  RunResult r = run("nfree --group D10 --normal C5 --quiet 2>/dev/null");
  CHECK(r.exit_code == 0);
  // four classes, the first two fully present and the last two fully absent
  size_t c5 = r.out.find("\"label\": \"C5\"");
  REQUIRE(c5 != std::string::npos);
  CHECK(r.out.find("false", 0) > c5);            // nothing false before C5
  CHECK(r.out.find("true", c5) == std::string::npos);  // nothing true after
}

TEST_CASE("absfix emits the chromatic document for C2 inside D10") {
  RunResult r = run("absfix --group D10 --subgroup C2 --quiet 2>/dev/null");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "{\n  \"columns\": {\n    \"2\": null,\n    \"5\": {\n"
        "      \"from\": 2\n    }\n  },\n  \"default\": {\n"
        "    \"from\": 2\n  },\n  \"generic\": false\n}\n");
}

TEST_CASE("the p-localization preset keeps one column minus the generic point") {
  RunResult r = run("localize --sh --invert-at 2 --quiet 2>/dev/null");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "{\n  \"columns\": {\n    \"2\": {\n      \"from\": 2\n    },\n"
        "    \"3\": null,\n    \"5\": null\n  },\n  \"default\": null,\n"
        "  \"generic\": false\n}\n");
}

TEST_CASE("poset localization handles files, empty y and figures") {
  auto poset = scratch_file("cli_chain3.poset", kChain3);
  std::string base = "localize --poset " + poset.string() + " --quiet ";

  RunResult whole = run(base + "2>/dev/null");  // y defaults to the empty set
  CHECK(whole.exit_code == 0);
  CHECK(whole.out.find("\"a\"") != std::string::npos);
  CHECK(whole.out.find("\"c\"") != std::string::npos);

  RunResult top = run(base + "--y '{\"members\":[\"c\"]}' 2>/dev/null");
  CHECK(top.exit_code == 0);
  CHECK(top.out.find("\"members\": []") != std::string::npos);

  auto yfile = scratch_file("cli_y.json", "{\"members\":[\"b\",\"c\"]}");
  RunResult fig = run(base + "--y-file " + yfile.string() +
                      " --format ascii 2>/dev/null");
  CHECK(fig.exit_code == 0);
  CHECK(fig.out.find("legend: * = Z = locus, + = V = complement of Y") !=
        std::string::npos);

  RunResult open_y = run(base + "--y '{\"members\":[\"a\"]}' 2>/dev/null");
  CHECK(open_y.exit_code == 5);
}

TEST_CASE("exit codes follow the documented table") {
  CHECK(run("inflation --group NOPE --normal G 2>/dev/null").exit_code == 2);
  CHECK(run("inflation --group C2xC2 --normal 2 2>/dev/null").exit_code == 3);

  RunResult capped =
      run("inflation --group S4 --normal G 2>/dev/null", "LOCUS_MAX_ORDER=10");
  CHECK(capped.exit_code == 4);

  CHECK(run("inflation --group D10 --normal C3 2>/dev/null").exit_code == 6);
  CHECK(run("inflation --group D10 --normal G --format png 2>/dev/null")
            .exit_code == 2);
  CHECK(run("localize --sh 2>/dev/null").exit_code == 2);
  CHECK(run("--definitely-not-a-flag 2>/dev/null").exit_code == 2);
}

TEST_CASE("verify prints the oracle table and honours the failure hook") {
  RunResult ok = run("verify --max-order 12 2>/dev/null");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("ok") != std::string::npos);
  CHECK(ok.out.find("FAIL") == std::string::npos);

  RunResult bad = run("verify --max-order 12 --inject-failure 2>/dev/null");
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("FAIL") != std::string::npos);
}

TEST_CASE("the stderr summary names the group and its primes") {
  RunResult err =
      run("inflation --group D10 --normal G 2>&1 1>/dev/null");
  CHECK(err.exit_code == 0);
  CHECK(err.out == "D10: |G|=10, 4 subgroup classes, primes 2 5\n");

  RunResult extras =
      run("inflation --group C5 --normal C5 --primes 2,3 2>&1 1>/dev/null");
  CHECK(extras.out ==
        "C5: |G|=5, 2 subgroup classes, primes 5 (extra primes 2,3)\n");

  RunResult quiet =
      run("inflation --group D10 --normal G --quiet 2>&1 1>/dev/null");
  CHECK(quiet.out.empty());
}

TEST_CASE("--out writes the artifact to a file") {
  auto path = std::filesystem::temp_directory_path() / "cli_fig.svg";
  std::filesystem::remove(path);
  RunResult r = run("inflation --group D10 --normal G --format svg --out " +
                    path.string() + " --quiet 2>/dev/null");
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == golden("fig2_d10.svg"));
}

TEST_CASE("group input accepts a generator file") {
  auto path = scratch_file("cli_s3.grp", "degree 3\n(1,2)\n(1,2,3)\n");
  RunResult err = run("inflation --group " + path.string() +
                      " --normal G 2>&1 1>/dev/null");
  CHECK(err.exit_code == 0);
  CHECK(err.out.find("|G|=6") != std::string::npos);
}
