#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "gpark/graph_io.hpp"

using namespace gpark;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

/// Runs the CLI with stderr folded into stdout.
RunResult run_cli(const std::string& args) {
  const std::string command = std::string(GPARK_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buffer;
  while (std::size_t got = fread(buffer.data(), 1, buffer.size(), pipe))
    result.output.append(buffer.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string data_path(const std::string& name) {
  return std::string(GPARK_DATA_DIR) + "/" + name;
}

std::string temp_path(const std::string& name) {
  return std::string("/tmp/gpark_test_") + name;
}

}  // namespace

TEST_CASE("analyze reports the verdict") {
  const RunResult r = run_cli("analyze " + data_path("two_component.json"));
  CHECK(r.exit_code == 0);
  CHECK_THAT(r.output, Catch::Matchers::ContainsSubstring("verdict: equal, 36 = 36"));
  CHECK_THAT(r.output, Catch::Matchers::ContainsSubstring("component {1,2}: dim 3, det 3"));
  CHECK_THAT(r.output, Catch::Matchers::ContainsSubstring("component {3,4,5}: dim 12, det 12"));
  CHECK_THAT(r.output, Catch::Matchers::ContainsSubstring("det L = 24"));
}

TEST_CASE("analyze rejects malformed files") {
  const std::string path = temp_path("broken.json");
  std::ofstream(path) << "{\"n\": 2, \"edges\": [[0 1]]}";
  const RunResult r = run_cli("analyze " + path);
  CHECK(r.exit_code == 2);
  CHECK_THAT(r.output, Catch::Matchers::ContainsSubstring("error:"));
}

TEST_CASE("census subcommand") {
  const RunResult r = run_cli("tu " + data_path("k4.json"));
  CHECK(r.exit_code == 0);
  CHECK_THAT(r.output,
             Catch::Matchers::ContainsSubstring("c=0:16, c=1:1, weighted 20, det 20, MATCH"));

  SECTION("edge guard is surfaced as a usage error") {
    const std::string path = temp_path("wide.json");
    std::ofstream(path) << graph_to_json(complete_multigraph(5, 2, 1));
    const RunResult guarded = run_cli("tu " + path);
    CHECK(guarded.exit_code == 2);
    CHECK_THAT(guarded.output, Catch::Matchers::ContainsSubstring("guard"));
    const RunResult lifted = run_cli("tu --max-edges 20 " + path);
    CHECK(lifted.exit_code == 0);
  }
}

TEST_CASE("product writes a file that parses back to the product") {
  const std::string out = temp_path("product.json");
  const RunResult r = run_cli("product " + data_path("join_left.json") + " " +
                              data_path("join_right.json") + " 1 --out " + out);
  REQUIRE(r.exit_code == 0);
  std::ifstream in(out);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const Multigraph round_trip = parse_graph_json(buffer.str());
  const Multigraph g1 = parse_graph_json([&] {
    std::ifstream f(data_path("join_left.json"));
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
  }());
  const Multigraph g2 = parse_graph_json([&] {
    std::ifstream f(data_path("join_right.json"));
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
  }());
  CHECK(round_trip == d_fold_product(g1, g2, 1));
}

TEST_CASE("parking subcommand lists the functions") {
  const RunResult r = run_cli("parking " + data_path("triangle.json"));
  CHECK(r.exit_code == 0);
  CHECK_THAT(r.output, Catch::Matchers::ContainsSubstring("parking functions: 3"));
  CHECK_THAT(r.output, Catch::Matchers::ContainsSubstring("det L = 3"));
  CHECK_THAT(r.output, Catch::Matchers::ContainsSubstring("(0,0)"));
  CHECK_THAT(r.output, Catch::Matchers::ContainsSubstring("(1,0)"));
  CHECK_THAT(r.output, Catch::Matchers::ContainsSubstring("(0,1)"));
}

TEST_CASE("classify subcommand") {
  const RunResult good = run_cli("classify " + data_path("two_component.json"));
  CHECK(good.exit_code == 0);
  CHECK_THAT(good.output, Catch::Matchers::ContainsSubstring("classification: true"));
  CHECK_THAT(good.output, Catch::Matchers::ContainsSubstring("agreement: yes"));

  const RunResult cycle = run_cli("classify " + data_path("four_cycle.json"));
  CHECK(cycle.exit_code == 0);
  CHECK_THAT(cycle.output, Catch::Matchers::ContainsSubstring("classification: false"));
  CHECK_THAT(cycle.output, Catch::Matchers::ContainsSubstring("verdict: not equal, 5 > 4"));
  CHECK_THAT(cycle.output, Catch::Matchers::ContainsSubstring("agreement: yes"));
}

TEST_CASE("verify subcommand") {
  SECTION("unknown suite lists the available ones") {
    const RunResult r = run_cli("verify bogus");
    CHECK(r.exit_code == 2);
    CHECK_THAT(r.output, Catch::Matchers::ContainsSubstring("thm1.1"));
    CHECK_THAT(r.output, Catch::Matchers::ContainsSubstring("thm3.9-scan"));
  }

  SECTION("a small scan passes and writes its report") {
    const std::string out = temp_path("scan_report.csv");
    const RunResult r = run_cli("verify thm3.9-scan --n 3 --a 1 --out " + out);
    CHECK(r.exit_code == 0);
    CHECK_THAT(r.output, Catch::Matchers::ContainsSubstring("verdict: pass"));
    std::ifstream in(out);
    std::stringstream s;
    s << in.rdbuf();
    CHECK_THAT(s.str(), Catch::Matchers::ContainsSubstring("fingerprint,n,edge_hash"));
    CHECK_THAT(s.str(), Catch::Matchers::ContainsSubstring("# verdict: pass"));
  }

  SECTION("uniform family with few samples") {
    const std::string out = temp_path("uniform_report.csv");
    const RunResult r = run_cli("verify thm2.2 --samples 20 --out " + out);
    CHECK(r.exit_code == 0);
  }
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("analyze").exit_code == 2);
  CHECK(run_cli("analyze /nonexistent/file.json").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}
