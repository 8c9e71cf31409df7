#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "qrep/cli.hpp"

using namespace qtest;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("arrow parsing") {
  auto arrows = parse_arrows("1>2,2>3", 3);
  REQUIRE(arrows.size() == 2);
  CHECK(arrows[0].from == 0);
  CHECK(arrows[0].to == 1);
  CHECK(arrows[1].from == 1);
  CHECK(arrows[1].to == 2);
  CHECK(parse_arrows("", 3).empty());

  CHECK_THROWS_WITH_AS((void)parse_arrows("1-2", 2), doctest::Contains("position 2"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS((void)parse_arrows("1>2,", 2), doctest::Contains("position 5"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS((void)parse_arrows("1>3", 2), doctest::Contains("out of range"),
                       std::invalid_argument);
}

TEST_CASE("dim and prime parsing") {
  CHECK(parse_dim_vector("1,2,1") == ivec({1, 2, 1}));
  CHECK_THROWS_AS((void)parse_dim_vector("1,,2"), std::invalid_argument);
  CHECK(parse_prime_list("2,3,5") == std::vector<long long>{2, 3, 5});
  CHECK_THROWS_WITH_AS((void)parse_prime_list("2,4"), doctest::Contains("not prime"),
                       std::invalid_argument);
}

TEST_CASE("orbits command emits valid json") {
  CliRun r = run({"orbits", "--type", "A", "--rank", "2", "--arrows", "1>2", "--dim", "1,1",
                  "--format", "json"});
  CHECK(r.code == 0);
  nlohmann::json report = nlohmann::json::parse(r.out);
  CHECK(report["orbits"].size() == 2);
  CHECK(report["dim_Ed"] == 1);
  // serialization round-trips through the parser
  CHECK(nlohmann::json::parse(report.dump()) == report);
}

TEST_CASE("orbits command rejects bad input with exit code 2") {
  CHECK(run({"orbits", "--type", "A", "--rank", "2", "--arrows", "1*2", "--dim", "1,1"}).code == 2);
  CHECK(run({"orbits", "--type", "Z", "--rank", "2", "--dim", "1,1"}).code == 2);
  CHECK(run({"orbits", "--type", "A", "--rank", "2", "--dim", "1,1,1"}).code == 2);
  CHECK(run({"orbits", "--type", "A", "--rank", "2", "--dim", "1,1", "--unknown-flag"}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
}

TEST_CASE("default orientation is used when arrows are omitted") {
  CliRun r = run({"orbits", "--type", "A", "--rank", "3", "--dim", "1,1,1", "--format", "json"});
  CHECK(r.code == 0);
  nlohmann::json report = nlohmann::json::parse(r.out);
  CHECK(report["quiver"]["arrows"] == nlohmann::json::parse("[[1,2],[2,3]]"));
}

TEST_CASE("poset command is deterministic dot") {
  std::vector<std::string> args = {"poset", "--type", "A", "--rank", "3", "--arrows",
                                   "1>2,2>3", "--dim", "1,1,1"};
  CliRun first = run(args);
  CliRun second = run(args);
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
  CHECK(first.out.find("digraph") != std::string::npos);
  // 4 nodes, 4 edges
  size_t nodes = 0, edges = 0, pos = 0;
  while ((pos = first.out.find("label=", pos)) != std::string::npos) {
    ++nodes;
    ++pos;
  }
  pos = 0;
  while ((pos = first.out.find(" -> ", pos)) != std::string::npos) {
    ++edges;
    ++pos;
  }
  CHECK(nodes == 4);
  CHECK(edges == 4);
}

TEST_CASE("verify command exit codes") {
  CHECK(run({"verify", "--type", "A", "--rank", "2", "--arrows", "1>2", "--dim", "1,1",
             "--suite", "all"}).code == 0);
  CHECK(run({"verify", "--type", "A", "--rank", "2", "--arrows", "1>2", "--dim", "1,1",
             "--suite", "nonsense"}).code == 2);
  // a hard guard on enumeration skips items and reports exhaustion
  CliRun guarded = run({"verify", "--type", "A", "--rank", "2", "--arrows", "1>2", "--dim", "1,1",
                        "--suite", "riedtmann", "--max-dim", "1"});
  CHECK(guarded.code == 3);
}

TEST_CASE("verify json report round-trips") {
  CliRun r = run({"verify", "--type", "A", "--rank", "2", "--arrows", "1>2", "--dim", "1,1",
                  "--suite", "bongartz", "--format", "json"});
  CHECK(r.code == 0);
  nlohmann::json report = nlohmann::json::parse(r.out);
  CHECK(report["pass"] == true);
  CHECK(report["failed"] == 0);
  CHECK(nlohmann::json::parse(report.dump()) == report);
}

TEST_CASE("zero dimension vector yields the single empty orbit") {
  CliRun r = run({"orbits", "--type", "A", "--rank", "2", "--arrows", "1>2", "--dim", "0,0",
                  "--format", "json"});
  CHECK(r.code == 0);
  nlohmann::json report = nlohmann::json::parse(r.out);
  REQUIRE(report["orbits"].size() == 1);
  CHECK(report["orbits"][0]["dim"] == 0);
  CHECK(report["hasse"].empty());
}

TEST_CASE("the A3 (1,2,1) report contains exactly one non-smooth orbit") {
  CliRun r = run({"orbits", "--type", "A", "--rank", "3", "--arrows", "1>2,2>3", "--dim", "1,2,1",
                  "--format", "json"});
  CHECK(r.code == 0);
  nlohmann::json report = nlohmann::json::parse(r.out);
  int non_smooth = 0;
  for (const auto& orb : report["orbits"]) non_smooth += orb["smooth"].get<bool>() ? 0 : 1;
  CHECK(non_smooth == 1);
}

TEST_CASE("verify on A1 passes vacuously") {
  CliRun r = run({"verify", "--type", "A", "--rank", "1", "--dim", "2", "--suite", "all"});
  CHECK(r.code == 0);
}

TEST_CASE("options can come from a config file") {
  std::string path = "qrep_test_config.ini";
  {
    std::ofstream f(path);
    f << "[orbits]\ntype = \"A\"\nrank = 2\narrows = \"1>2\"\ndim = \"1,1\"\nformat = \"json\"\n";
  }
  CliRun r = run({"--config", path, "orbits"});
  std::remove(path.c_str());
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["orbits"].size() == 2);
}

TEST_CASE("seeded reports are stable") {
  std::vector<std::string> args = {"verify", "--type", "A",    "--rank",   "3",
                                   "--arrows", "1>2,2>3", "--dim", "1,2,1", "--suite", "geometric",
                                   "--seed", "7", "--format", "json"};
  CliRun first = run(args);
  CliRun second = run(args);
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
}
