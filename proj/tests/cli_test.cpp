#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

// End-to-end tests against the installed binary: exit codes, exact output
// bytes for the machine formats, and reproducibility of repeated runs.

namespace {

using Json = nlohmann::json;

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::filesystem::path scratch_dir() {
  static const std::filesystem::path dir = [] {
    auto d = std::filesystem::temp_directory_path() /
             ("braidlk_cli_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spill(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

RunResult run_cli(const std::string& args) {
  const auto out_path = scratch_dir() / "stdout.txt";
  const auto err_path = scratch_dir() / "stderr.txt";
  const std::string cmd = std::string(BRAIDLK_CLI_PATH) + " " + args + " >" +
                          out_path.string() + " 2>" + err_path.string();
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  return r;
}

const char* const kA1 = "-2 -1 -1 -2 1 1 2 1 1 2 -1 -1";

}  // namespace

TEST_CASE("usage errors exit 1") {
  CHECK(run_cli("").code == 1);
  CHECK(run_cli("frobnicate").code == 1);
  CHECK(run_cli("invariant --word '' --format yaml").code == 1);
  CHECK(run_cli("invariant").code == 1);  // a word is required
  CHECK(run_cli("family --kind x").code == 1);
  CHECK(run_cli("family --kind a --k 0").code == 1);
  CHECK(run_cli("slide").code == 1);  // --k is required
  CHECK(run_cli("verify --suite nonsense").code == 1);
  CHECK(run_cli("--help").code == 0);
}

TEST_CASE("invariant prints the empty word's value") {
  const RunResult human = run_cli("invariant --word ''");
  CHECK(human.code == 0);
  CHECK(human.out == "word: \ni_lk: 2X_0\nG: 0\n");

  const RunResult json = run_cli("invariant --word '' --format json");
  CHECK(json.code == 0);
  CHECK(json.out ==
        "{\n"
        "  \"word\": \"\",\n"
        "  \"n\": 3,\n"
        "  \"i_lk\": {\n"
        "    \"X\": {\n"
        "      \"0\": 2\n"
        "    }\n"
        "  },\n"
        "  \"G\": 0\n"
        "}\n");
}

TEST_CASE("invariant reports a_1 with G equal to four") {
  const RunResult r = run_cli(std::string("invariant --word '") + kA1 + "' --format json");
  REQUIRE(r.code == 0);
  const Json doc = Json::parse(r.out);
  CHECK(doc["word"] == kA1);
  CHECK(doc["n"] == 3);
  CHECK(doc["G"] == 4);
  CHECK(doc["i_lk"]["X"]["-2"] == 1);
  CHECK(doc["i_lk"]["X"]["0"] == 4);
  CHECK(doc["i_lk"]["Y"]["1"] == 3);
}

TEST_CASE("invariant rejects bad words and non-knot closures with exit 2") {
  const RunResult non_knot = run_cli("invariant --word '1 2'");
  CHECK(non_knot.code == 2);
  CHECK(non_knot.out.empty());
  CHECK(non_knot.err == "the closure of this word is not a knot\n");

  CHECK(run_cli("invariant --word '1 2 1'").code == 2);
  CHECK(run_cli("invariant --word '0'").code == 2);
  CHECK(run_cli("invariant --word 'abc'").code == 2);
  CHECK(run_cli("invariant --word '3 3'").code == 2);    // index needs n > 3
  CHECK(run_cli("invariant --word '1 1' --n 4").code == 2);
}

TEST_CASE("family emits the defining words") {
  CHECK(run_cli("family --kind a --k 1").out == std::string(kA1) + "\n");
  CHECK(run_cli("family --kind V").out == "1 1\n");
  CHECK(run_cli("family --kind W").out == "2 1 1 2\n");
  CHECK(run_cli("family --kind b --k 1").out == "-2 -1 -1 -2 2 1 1 2 1 1 -1 -1\n");

  const RunResult json = run_cli("family --kind a --k 2 --format json");
  CHECK(json.code == 0);
  CHECK(json.out ==
        "{\n"
        "  \"kind\": \"a\",\n"
        "  \"k\": 2,\n"
        "  \"n\": 3,\n"
        "  \"len\": 24,\n"
        "  \"word\": \"-2 -1 -1 -2 -2 -1 -1 -2 1 1 1 1 2 1 1 2 2 1 1 2 -1 -1 -1 -1\"\n"
        "}\n");
}

TEST_CASE("slide reports the schedule and its G profile") {
  const RunResult human = run_cli("slide --k 1");
  CHECK(human.code == 0);
  CHECK(human.out ==
        "k: 1\n"
        "moves: 4 braid (expected 4)\n"
        "final matches b_k: yes\n"
        "G start: 4\n"
        "G final: 0\n"
        "dG histogram: -1 x4\n");

  const RunResult json = run_cli("slide --k 1 --format json");
  CHECK(json.out ==
        "{\n"
        "  \"k\": 1,\n"
        "  \"moves\": 4,\n"
        "  \"expected_moves\": 4,\n"
        "  \"final_matches\": true,\n"
        "  \"G_start\": 4,\n"
        "  \"G_final\": 0,\n"
        "  \"delta_G_histogram\": {\n"
        "    \"-1\": 4\n"
        "  }\n"
        "}\n");

  const RunResult lines = run_cli("slide --k 1 --format jsonl");
  std::istringstream in(lines.out);
  std::string first;
  std::getline(in, first);
  CHECK(first ==
        R"({"step":1,"move":"braid@6:LU","word":"-2 -1 -1 -2 1 2 1 2 1 2 -1 -1","G":3})");
  int count = 1;
  for (std::string line; std::getline(in, line);) ++count;
  CHECK(count == 4);

  CHECK(run_cli("slide --k 2").out.find("moves: 16 braid (expected 16)") !=
        std::string::npos);
}

TEST_CASE("distance certifies d(a_1, E) = 4 under the published caps") {
  const RunResult human =
      run_cli(std::string("distance --a '") + kA1 + "' --b '' --max-len 16 --max-cost 6");
  CHECK(human.code == 0);
  CHECK(human.out ==
        "n: 3\n"
        "caps: max_len=16 max_cost=6\n"
        "lower bound: 4\n"
        "cost upper: 4\n"
        "certified exact: yes\n"
        "states visited: 256980\n"
        "trace steps: 10\n");

  const RunResult json = run_cli(std::string("distance --a '") + kA1 +
                                 "' --b '' --max-len 16 --max-cost 6 --format json");
  const Json doc = Json::parse(json.out);
  CHECK(doc["lower_bound"] == 4);
  CHECK(doc["cost_upper"] == 4);
  CHECK(doc["certified_exact"] == true);
  CHECK(doc["states_visited"] == 256980);
  REQUIRE(doc["trace"].size() == 10);
  CHECK(doc["trace"][0]["move"] == "braid@6:LU");
  CHECK(doc["trace"][9]["word"] == "");
}

TEST_CASE("distance works without a usable lower bound") {
  const RunResult r = run_cli("distance --a '1 2 1' --b '2 1 2'");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "n: 3\n"
        "caps: max_len=10 max_cost=24\n"
        "lower bound: unavailable (closure of a is not a knot)\n"
        "cost upper: 1\n"
        "certified exact: no\n"
        "states visited: 2910\n"
        "trace steps: 1\n");

  const RunResult lines = run_cli("distance --a '1 2 1' --b '2 1 2' --format jsonl");
  CHECK(lines.out == "{\"step\":1,\"move\":\"braid@1:LU\",\"word\":\"2 1 2\"}\n");
}

TEST_CASE("distance reports exhausted caps as a normal result") {
  const RunResult r = run_cli("distance --a '1' --b '2'");
  CHECK(r.code == 0);
  CHECK(r.out.find("cost upper: none found within caps") != std::string::npos);
  CHECK(r.out.find("trace steps: 0") != std::string::npos);
}

TEST_CASE("distance can disable the bound shortcut") {
  const RunResult r = run_cli(std::string("distance --a '") + kA1 +
                              "' --b '' --max-len 12 --max-cost 4 --no-bound");
  CHECK(r.code == 0);
  CHECK(r.out.find("lower bound: disabled") != std::string::npos);
  CHECK(r.out.find("cost upper: 4") != std::string::npos);
  CHECK(r.out.find("certified exact: no") != std::string::npos);
}

TEST_CASE("distance validates words with exit 2") {
  CHECK(run_cli("distance --a '1 x' --b ''").code == 2);
  CHECK(run_cli("distance --a '1' --b '0'").code == 2);
}

TEST_CASE("verify formula and family suites pass and serialize as tables") {
  const RunResult formula = run_cli("verify --suite formula --k-max 3 --format csv");
  CHECK(formula.code == 0);
  CHECK(formula.out ==
        "check,pass,detail\n"
        "formula k=1,true,g=4 terms match\n"
        "formula k=2,true,g=16 terms match\n"
        "formula k=3,true,g=36 terms match\n");

  const RunResult family = run_cli("verify --suite family --k-max 3 --format csv");
  CHECK(family.code == 0);
  CHECK(family.out ==
        "k,len,G,4k2,pass\n"
        "1,12,4,4,true\n"
        "2,24,16,16,true\n"
        "3,36,36,36,true\n");

  const RunResult json = run_cli("verify --suite family --k-max 2 --format json");
  const Json doc = Json::parse(json.out);
  CHECK(doc["suite"] == "family");
  CHECK(doc["all_pass"] == true);
  REQUIRE(doc["rows"].size() == 3);  // two k rows plus the time-budget row
  CHECK(doc["rows"][0]["check"] == "family k=1");
}

TEST_CASE("verify moves passes with a small reproducible sweep") {
  const RunResult r = run_cli("verify --suite moves --trials 25 --seed 0");
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS  braid deltas  [25/25 trials]") != std::string::npos);
  CHECK(r.out.find("all 4 checks passed") != std::string::npos);

  const RunResult csv = run_cli("verify --suite moves --trials 5 --seed 0 --format csv");
  CHECK(csv.out ==
        "check,pass,detail\n"
        "braid deltas,true,5/5 trials\n"
        "commute deltas,true,5/5 trials\n"
        "cancel deltas,true,5/5 trials\n"
        "insert deltas,true,5/5 trials\n");
}

TEST_CASE("the full verify sweep fails only on the concatenation-order identity") {
  const RunResult r =
      run_cli("verify --suite all --trials 40 --k-max 10 --format json");
  CHECK(r.code == 3);
  const Json doc = Json::parse(r.out);
  CHECK(doc["all_pass"] == false);
  int failing = 0;
  for (const auto& row : doc["rows"]) {
    if (row["pass"] == true) continue;
    ++failing;
    const std::string name = row["check"];
    CHECK(name.rfind("concat order k=", 0) == 0);
  }
  CHECK(failing == 10);
}

TEST_CASE("identical inputs give byte-identical machine outputs") {
  const char* const commands[] = {
      "verify --suite moves --trials 40 --seed 7 --format json",
      "distance --a '1 2 1' --b '2 1 2' --format json",
      "slide --k 2 --format jsonl",
      "verify --suite family --k-max 4 --format csv",
  };
  for (const char* cmd : commands) {
    const RunResult first = run_cli(cmd);
    const RunResult second = run_cli(cmd);
    CHECK(first.code == second.code);
    CHECK(first.out == second.out);
  }
}

TEST_CASE("--out writes the report to a file and keeps stdout quiet") {
  const auto path = scratch_dir() / "report.json";
  const RunResult r =
      run_cli("invariant --word '' --format json --out " + path.string());
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  const Json doc = Json::parse(slurp(path));
  CHECK(doc["G"] == 0);
}

TEST_CASE("words load from files exactly like inline text") {
  const auto path = scratch_dir() / "word.txt";
  spill(path, std::string(kA1) + "\n");
  const RunResult from_file = run_cli("invariant --word-file " + path.string());
  const RunResult inline_word = run_cli(std::string("invariant --word '") + kA1 + "'");
  CHECK(from_file.code == 0);
  CHECK(from_file.out == inline_word.out);

  CHECK(run_cli("invariant --word '1' --word-file " + path.string()).code == 1);
  CHECK(run_cli(std::string("distance --a-file ") + path.string() + " --b ''").code == 0);
}
