#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "json.hpp"

#ifndef UNREF_CLI_PATH
#error "UNREF_CLI_PATH must point at the built binary"
#endif

namespace {

using nlohmann::ordered_json;

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  const std::string command = env_prefix + std::string(UNREF_CLI_PATH) + " " + args + " 2>/dev/null";
  CliResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer;
  std::size_t n = 0;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.out.append(buffer.data(), n);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

ordered_json parse_envelope(const CliResult& result) {
  REQUIRE(result.exit_code == 0);
  return ordered_json::parse(result.out);
}

}  // namespace

TEST_CASE("check command") {
  auto refinable = parse_envelope(run_cli("check 1 2 3 5 6 8 9 11 13"));
  CHECK(refinable["schema_version"] == "1");
  CHECK(refinable["command"] == "check");
  CHECK(refinable["result"]["verdict"] == "refinable");
  CHECK(refinable["result"]["witness"]["part"] == 11);
  CHECK(refinable["result"]["witness"]["summands"] == ordered_json::array({4, 7}));

  auto trivial = parse_envelope(run_cli("check 1 2 3"));
  CHECK(trivial["result"]["verdict"] == "unrefinable");

  auto worked = parse_envelope(run_cli("check 1 2 3 4 5 8 10 11 12 14 17"));
  CHECK(worked["result"]["verdict"] == "unrefinable");
  CHECK(worked["result"]["forbidden_vector"]["entries"] ==
        ordered_json::array({24, 7, 20, 9, 16, 23}));

  CHECK(run_cli("check 2 1").exit_code == 2);
  CHECK(run_cli("check 3 3").exit_code == 2);
  CHECK(run_cli("check 5").exit_code == 2);  // needs two parts
  CHECK(run_cli("check 1 2 3 --assert-unrefinable").exit_code == 0);
  CHECK(run_cli("check 1 2 3 5 6 8 9 11 13 --assert-unrefinable").exit_code == 1);
}

TEST_CASE("semigroup command") {
  auto info = parse_envelope(run_cli("semigroup --gaps 1,2,4,5,7,10,13 info"));
  CHECK(info["command"] == "semigroup.info");
  CHECK(info["result"]["frobenius"] == 13);
  CHECK(info["result"]["genus"] == 7);
  CHECK(info["result"]["multiplicity"] == 3);
  CHECK(info["result"]["is_semigroup"] == true);
  CHECK(info["result"]["symmetry"] == "symmetric");

  auto open = parse_envelope(run_cli("semigroup --gaps 1,2,5,6,8 info"));
  CHECK(open["result"]["is_semigroup"] == false);

  auto apery = parse_envelope(run_cli("semigroup --gaps 1,2,4,5,7,10,13 apery 3"));
  CHECK(apery["result"]["apery"] == ordered_json::array({0, 16, 8}));

  auto msg = parse_envelope(run_cli("semigroup --generators 3,8,16 msg"));
  CHECK(msg["result"]["generators"] == ordered_json::array({3, 8}));
  CHECK(msg["result"]["embedding_dimension"] == 2);

  CHECK(run_cli("semigroup --generators 2,4 info").exit_code == 2);
  CHECK(run_cli("semigroup --gaps 1,2 --generators 3,8 info").exit_code == 2);
}

TEST_CASE("young command") {
  auto profile = parse_envelope(run_cli("young --gaps 1,2,4,5,7,10,13"));
  CHECK(profile["result"]["profile"] == ordered_json::array({7, 5, 3, 2, 2, 1, 1}));
  CHECK(profile["result"]["first_column"] == ordered_json::array({13, 10, 7, 5, 4, 2, 1}));

  auto crit = parse_envelope(run_cli("young --gaps 1,2,5,6,8 --criterion unrefinable"));
  CHECK(crit["result"]["criterion"]["holds"] == true);

  auto single = parse_envelope(run_cli("young --gaps 1"));
  CHECK(single["result"]["profile"] == ordered_json::array({1}));

  auto ascii = run_cli("young --gaps 1,2,4,5,7,10,13 --hooks --ascii");
  CHECK(ascii.exit_code == 0);
  CHECK(ascii.out.find("13 10  7  5  4  2  1") != std::string::npos);
  CHECK(ascii.out.find("first column (top to bottom): 13 10 7 5 4 2 1") != std::string::npos);

  CHECK(run_cli("young --gaps 0,1").exit_code == 2);
}

TEST_CASE("enum and census commands") {
  auto stratum = parse_envelope(run_cli("enum --max-part 13 --mex 3"));
  CHECK(stratum["result"]["count"] == 12);

  auto tiny = parse_envelope(run_cli("enum --max-part 2 --list"));
  CHECK(tiny["result"]["count"] == 1);
  CHECK(tiny["result"]["listing"] == ordered_json::array({ordered_json::array({1, 2})}));

  auto census = parse_envelope(run_cli("census --frobenius 13 --symmetric"));
  auto bar = parse_envelope(run_cli("enum --max-part 13 --max-missing"));
  CHECK(census["result"]["count"] == bar["result"]["count"]);

  CHECK(run_cli("enum --max-part 31").exit_code == 2);
  CHECK(run_cli("enum --max-part 10 --weight 10").exit_code == 2);

  // the env override loosens the cap
  auto wide = run_cli("enum --max-part 31", "UNREF_MAX_CAP=31 ");
  CHECK(wide.exit_code == 0);
}

TEST_CASE("verify commands") {
  auto primes = parse_envelope(run_cli("verify prime-identity --primes 5,7,11,13"));
  CHECK(primes["result"]["all_equal"] == true);
  CHECK(run_cli("verify prime-identity --primes 4").exit_code == 2);
  CHECK(run_cli("verify prime-identity --primes 3").exit_code == 2);

  auto mirror = parse_envelope(run_cli("verify mirror --max-part 15"));
  CHECK(mirror["result"]["ok"] == true);

  auto subset = parse_envelope(run_cli("verify maximal-subset --n-max 7"));
  CHECK(subset["result"]["ok"] == true);
}

TEST_CASE("lattice command") {
  auto lattice = parse_envelope(run_cli("lattice 1 2 4 5 7 10 13"));
  CHECK(lattice["result"]["node_count"] == 12);
  CHECK(lattice["result"]["nodes"].back() == ordered_json::array({6, 8, 9, 11, 12}));

  auto single = parse_envelope(run_cli("lattice 1 2 3"));
  CHECK(single["result"]["node_count"] == 1);

  auto dot = run_cli("lattice 1 2 4 5 7 10 13 --dot");
  CHECK(dot.exit_code == 0);
  CHECK(dot.out.find("digraph") != std::string::npos);
  CHECK(dot.out.find("label=\"{6,8,9,11,12}\"") != std::string::npos);
  CHECK(dot.out.find("label=\"6\"") != std::string::npos);

  CHECK(run_cli("lattice 1 2 3 5 6 8 9 11 13").exit_code == 2);  // refinable base
}

TEST_CASE("envelopes round-trip byte for byte") {
  for (const std::string args : {"check 1 2 3", "semigroup --gaps 1,2,4,5,7,10,13 info",
                                 "young --gaps 1,2,5,6,8 --hooks", "enum --max-part 9 --list",
                                 "lattice 1 2 4 5 7 10 13"}) {
    const auto result = run_cli(args);
    REQUIRE(result.exit_code == 0);
    const auto parsed = ordered_json::parse(result.out);
    CHECK(parsed.dump(2) + "\n" == result.out);
  }
}

TEST_CASE("output file") {
  const std::string path = "/tmp/unref_cli_test_envelope.json";
  std::remove(path.c_str());
  const auto result = run_cli("check 1 2 3 --output " + path);
  CHECK(result.exit_code == 0);
  CHECK(result.out.empty());
  FILE* f = std::fopen(path.c_str(), "r");
  REQUIRE(f != nullptr);
  std::fclose(f);
  std::remove(path.c_str());
}

TEST_CASE("both routes agree through the CLI on every small partition") {
  // full sweep: every distinct partition with largest part <= 14
  for (int largest = 2; largest <= 14; ++largest) {
    const std::uint32_t limit = 1u << (largest - 1);
    for (std::uint32_t mask = 1; mask < limit; ++mask) {
      std::string args = "check";
      for (int v = 1; v < largest; ++v) {
        if (mask >> (v - 1) & 1u) args += " " + std::to_string(v);
      }
      args += " " + std::to_string(largest) + " --both";
      const auto result = run_cli(args);
      REQUIRE(result.exit_code == 0);  // exit 3 would flag a route disagreement
    }
  }
}
