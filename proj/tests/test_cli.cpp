// End-to-end command-line tests: specs are written to a scratch directory,
// the entry point is invoked with a constructed argv, and --out files are
// read back.  Exit codes follow the contract 0 = pass, 1 = invariant
// violation, 2 = input error, 3 = cap exceeded.
#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "eggbox/cli.hpp"

using namespace eggbox;

namespace {

const std::filesystem::path& scratch_dir() {
  static const std::filesystem::path dir = [] {
    auto d = std::filesystem::temp_directory_path() / "eggbox-cli-tests";
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
  auto p = scratch_dir() / name;
  std::ofstream out(p);
  out << text;
  return p.string();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string out_path(const std::string& name) {
  return (scratch_dir() / name).string();
}

int run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "eggbox");
  std::vector<char*> argv;
  argv.reserve(args.size());
  for (auto& s : args) argv.push_back(s.data());
  return cli::cli_main(static_cast<int>(argv.size()), argv.data());
}

std::size_t count_occurrences(const std::string& text,
                              const std::string& needle) {
  std::size_t count = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size()))
    ++count;
  return count;
}

}  // namespace

TEST_CASE("build prints a structural summary", "[cli]") {
  std::string t3 = write_file(
      "t3.json", "{\"kind\": \"full_transformation\", \"n\": 3}\n");
  std::string out = out_path("build_t3.txt");
  REQUIRE(run_cli({"build", "--spec", t3, "--out", out}) == 0);
  REQUIRE(read_file(out) ==
          "semigroup T_3\n"
          "|S| = 27\n"
          "|E(S)| = 10\n"
          "|Reg(S)| = 27\n"
          "D-classes: 3\n");

  std::string mono = write_file(
      "mono.json", "{\"kind\": \"monogenic\", \"index\": 3, \"period\": 1}\n");
  out = out_path("build_mono.txt");
  REQUIRE(run_cli({"build", "--spec", mono, "--out", out}) == 0);
  REQUIRE(read_file(out) ==
          "semigroup monogenic(3,1)\n"
          "|S| = 3\n"
          "|E(S)| = 1\n"
          "|Reg(S)| = 1\n"
          "D-classes: 3\n");
}

TEST_CASE("build loads abstract semigroups from cayley tables", "[cli]") {
  write_file("z2.csv", "n=2\n0,1\n1,0\n");
  std::string spec = write_file(
      "z2.json", "{\"kind\": \"cayley_csv\", \"path\": \"z2.csv\"}\n");
  std::string out = out_path("build_z2.txt");
  REQUIRE(run_cli({"build", "--spec", spec, "--out", out}) == 0);
  REQUIRE(read_file(out) ==
          "semigroup cayley:z2.csv\n"
          "|S| = 2\n"
          "|E(S)| = 1\n"
          "|Reg(S)| = 2\n"
          "D-classes: 1\n");

  // a non-associative table is rejected as bad input, not as an internal
  // inconsistency
  write_file("bad_table.csv", "n=2\n1,0\n0,0\n");
  std::string bad = write_file(
      "bad_table.json",
      "{\"kind\": \"cayley_csv\", \"path\": \"bad_table.csv\"}\n");
  REQUIRE(run_cli({"build", "--spec", bad}) == 2);
}

TEST_CASE("analyze emits a json document for the left ideal", "[cli]") {
  std::string t3 = write_file(
      "t3.json", "{\"kind\": \"full_transformation\", \"n\": 3}\n");
  std::string out = out_path("analyze_left.json");
  REQUIRE(run_cli({"analyze", "--spec", t3, "--a", "[1,2,2]", "--out", out}) ==
          0);
  Json j = Json::parse(read_file(out));

  REQUIRE(j["side"] == "left");
  REQUIRE(j["a"] == "[1,2,2]");
  REQUIRE(j["a_idempotent"] == true);
  REQUIRE(j["a_regular"] == true);
  REQUIRE(j["substituted"] == false);
  REQUIRE(j["sandwich_regular"] == true);
  REQUIRE(j["sizes"]["Sa"] == 8);
  REQUIRE(j["sizes"]["aSa"] == 4);
  REQUIRE(j["sizes"]["P"] == 6);
  REQUIRE(j["sizes"]["Reg(Sa)"] == 6);
  REQUIRE(j["green_formulas_ok"] == true);
  REQUIRE(j["counterexamples"].empty());
  REQUIRE(j["deep"] == true);
  REQUIRE(j["inflation"]["rho"] == 2);
  REQUIRE(j["mid_identities"].size() == 2);
  REQUIRE(j["ri_dominated"] == true);
  REQUIRE(j["ranks"]["rank(Reg(Sa))"]["value"] == 3);
  REQUIRE(j["ranks"]["rank(Reg(Sa))"]["exact"] == true);
  REQUIRE(j["ranks"]["bound_attained"] == true);
  REQUIRE(j["ranks"]["left_group_structure_ok"] == true);
  REQUIRE(j["idempotent_generated"]["rank(IG(Sa))"]["value"] == 4);
  REQUIRE(j["idempotent_generated"]["idrank(IG(Sa))"]["value"] == 4);
  REQUIRE(j["idempotent_generated"]["bound_attained"] == true);
  REQUIRE(j["inverse_case"]["applicable"] == false);
}

TEST_CASE("analyze mirrors the right ideal through the opposite", "[cli]") {
  std::string t3 = write_file(
      "t3.json", "{\"kind\": \"full_transformation\", \"n\": 3}\n");
  std::string out = out_path("analyze_right.json");
  REQUIRE(run_cli({"analyze", "--spec", t3, "--side", "right", "--a",
                   "[1,2,2]", "--out", out}) == 0);
  Json j = Json::parse(read_file(out));

  REQUIRE(j["side"] == "right");
  REQUIRE(j["sizes"]["aS"] == 9);
  REQUIRE(j["sizes"]["Q"] == 7);
  REQUIRE(j["q_direct_check_ok"] == true);
  REQUIRE(j["deep"] == true);
  REQUIRE(j["inflation"]["lambda"] == 2);
  REQUIRE(j["li_dominated"] == true);
  REQUIRE(j["ranks"]["rank(Reg(aS))"]["value"] == 3);
  REQUIRE(j["ranks"]["rank(Reg(aS))"]["exact"] == true);
}

TEST_CASE("analyze handles non-regular generators and abstract elements",
          "[cli]") {
  std::string mono = write_file(
      "mono.json", "{\"kind\": \"monogenic\", \"index\": 3, \"period\": 1}\n");
  std::string out = out_path("analyze_mono.json");
  // --a 2 is the 1-based index of the square of the generator
  REQUIRE(run_cli({"analyze", "--spec", mono, "--a", "2", "--out", out}) == 0);
  Json j = Json::parse(read_file(out));
  REQUIRE(j["a"] == "x2");
  REQUIRE(j["a_regular"] == false);
  REQUIRE(j["a_idempotent"] == false);
  REQUIRE(j["deep"] == false);
  REQUIRE(j["sizes"]["Sa"] == 1);
  REQUIRE(j["sizes"]["P''"] == 1);
  REQUIRE(j["green_formulas_ok"] == true);

  REQUIRE(run_cli({"analyze", "--spec", mono, "--a", "7"}) == 2);
  REQUIRE(run_cli({"analyze", "--spec", mono, "--a", "0"}) == 2);
}

TEST_CASE("analyze covers the inverse specialization", "[cli]") {
  std::string i2 = write_file(
      "i2.json", "{\"kind\": \"symmetric_inverse\", \"n\": 2}\n");
  std::string out = out_path("analyze_i2.json");
  REQUIRE(run_cli({"analyze", "--spec", i2, "--a", "[1,-]", "--out", out}) ==
          0);
  Json j = Json::parse(read_file(out));
  REQUIRE(j["a"] == "[1,-]");
  REQUIRE(j["uniquely_sandwich_regular"] == true);
  REQUIRE(j["sizes"]["Sa"] == 3);
  REQUIRE(j["sizes"]["P"] == 2);
  REQUIRE(j["deep"] == true);
  REQUIRE(j["inflation"]["rho"] == 1);
  REQUIRE(j["mid_identities"].size() == 1);
  REQUIRE(j["inverse_case"]["applicable"] == true);
  REQUIRE(j["inverse_case"]["ok"] == true);
  REQUIRE(j["ranks"]["rank(Reg(Sa))"]["value"] == 2);
  REQUIRE(j["idempotent_generated"]["rank(IG(Sa))"]["value"] == 2);
}

TEST_CASE("bad inputs exit with code 2", "[cli]") {
  // missing required option (--a) is a usage error
  std::string t3 = write_file(
      "t3.json", "{\"kind\": \"full_transformation\", \"n\": 3}\n");
  REQUIRE(run_cli({"analyze", "--spec", t3}) == 2);

  // element literal that is not in the semigroup
  REQUIRE(run_cli({"analyze", "--spec", t3, "--a", "[1,1,1,1]"}) == 2);

  // unknown spec kind
  std::string weird = write_file("weird.json", "{\"kind\": \"weird\"}\n");
  REQUIRE(run_cli({"build", "--spec", weird}) == 2);

  // missing file
  REQUIRE(run_cli({"build", "--spec", out_path("no_such_spec.json")}) == 2);

  // malformed json reports the offending line and column
  std::string broken = write_file(
      "broken.json", "{\n  \"kind\": \"full_transformation\",\n  \"n\":\n}\n");
  REQUIRE(run_cli({"build", "--spec", broken}) == 2);
  REQUIRE_THROWS_MATCHES(
      cli::load_spec(broken), InputError,
      Catch::Matchers::MessageMatches(
          Catch::Matchers::ContainsSubstring("line 4") &&
          Catch::Matchers::ContainsSubstring("column")));

  // missing numeric field
  std::string no_n = write_file("no_n.json",
                                "{\"kind\": \"full_transformation\"}\n");
  REQUIRE(run_cli({"build", "--spec", no_n}) == 2);
}

TEST_CASE("caps exit with code 3", "[cli]") {
  // element cap: T_9 is declined before any enumeration happens
  std::string t9 = write_file(
      "t9.json", "{\"kind\": \"full_transformation\", \"n\": 9}\n");
  REQUIRE(run_cli({"build", "--spec", t9}) == 3);

  // relation cap: T_6 enumerates fine but is too large to analyse
  std::string t6 = write_file(
      "t6.json", "{\"kind\": \"full_transformation\", \"n\": 6}\n");
  REQUIRE(run_cli({"build", "--spec", t6}) == 3);

  // the verify suites are calibrated for n <= 5
  REQUIRE(run_cli({"verify", "--max-n", "6"}) == 3);
}

TEST_CASE("verify quick suite passes and reports stages", "[cli]") {
  std::string out = out_path("verify_quick.txt");
  REQUIRE(run_cli({"verify", "--suite", "quick", "--max-n", "2", "--out",
                   out}) == 0);
  std::string text = read_file(out);
  REQUIRE(text.rfind("suite: quick, max_n = 2", 0) == 0);
  REQUIRE(count_occurrences(text, "[PASS] ") == 8);
  REQUIRE(count_occurrences(text, "[FAIL]") == 0);
  REQUIRE(text.find("closed-form cross-checks") != std::string::npos);
  REQUIRE(text.find("RESULT: PASS") != std::string::npos);
}

TEST_CASE("verify reports failure when rank certificates are starved",
          "[cli]") {
  // a one-step search budget cannot certify any nontrivial rank, so the
  // cross-check stages must fail loudly rather than accept a guess
  std::string out = out_path("verify_starved.txt");
  REQUIRE(run_cli({"verify", "--suite", "quick", "--max-n", "2",
                   "--rank-budget", "1", "--out", out}) == 1);
  std::string text = read_file(out);
  REQUIRE(text.find("RESULT: FAIL") != std::string::npos);
  REQUIRE(text.find("failed:") != std::string::npos);
}

TEST_CASE("render writes deterministic diagrams", "[cli]") {
  std::string t3 = write_file(
      "t3.json", "{\"kind\": \"full_transformation\", \"n\": 3}\n");
  std::string first = out_path("render1.txt");
  std::string second = out_path("render2.txt");
  REQUIRE(run_cli({"render", "--spec", t3, "--out", first}) == 0);
  REQUIRE(run_cli({"render", "--spec", t3, "--out", second}) == 0);
  std::string text = read_file(first);
  REQUIRE(text == read_file(second));
  REQUIRE(text.rfind("# T_3\n", 0) == 0);
  REQUIRE(text.find("# order 27, 3 D-classes") != std::string::npos);

  std::string dot = out_path("render.dot");
  REQUIRE(run_cli({"render", "--spec", t3, "--format", "dot", "--out", dot}) ==
          0);
  REQUIRE(read_file(dot).rfind("digraph eggbox {", 0) == 0);
}

TEST_CASE("render draws ideals and their regular subsemigroups", "[cli]") {
  std::string t3 = write_file(
      "t3.json", "{\"kind\": \"full_transformation\", \"n\": 3}\n");

  std::string out = out_path("render_sa.txt");
  REQUIRE(run_cli({"render", "--spec", t3, "--target", "Sa", "--a", "[1,2,2]",
                   "--out", out}) == 0);
  std::string text = read_file(out);
  REQUIRE(text.rfind("# T_3: Sa for a=[1,2,2]\n", 0) == 0);
  REQUIRE(text.find("# order 8, 3 D-classes") != std::string::npos);

  out = out_path("render_regsa.txt");
  REQUIRE(run_cli({"render", "--spec", t3, "--target", "RegSa", "--a",
                   "[1,2,2]", "--out", out}) == 0);
  text = read_file(out);
  REQUIRE(text.rfind("# T_3: Reg(Sa) for a=[1,2,2]\n", 0) == 0);
  REQUIRE(text.find("# order 6, 2 D-classes") != std::string::npos);

  out = out_path("render_regas.txt");
  REQUIRE(run_cli({"render", "--spec", t3, "--target", "RegaS", "--a",
                   "[1,2,2]", "--out", out}) == 0);
  text = read_file(out);
  REQUIRE(text.rfind("# T_3: Reg(aS) for a=[1,2,2]\n", 0) == 0);
  REQUIRE(text.find("# order 7, 2 D-classes") != std::string::npos);
  // the size-1 kernel class and the size-2 kernel class band the columns
  REQUIRE(count_occurrences(text, " # ") > 0);

  // ideal targets need a generator
  REQUIRE(run_cli({"render", "--spec", t3, "--target", "Sa"}) == 2);
}
