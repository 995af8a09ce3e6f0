#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "xxc/entropy.hpp"
#include "xxc/table.hpp"

namespace {

struct RunResult {
  int status = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string command = std::string(XXC_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  while (std::size_t got = std::fread(buffer, 1, sizeof(buffer), pipe))
    result.output.append(buffer, got);
  const int raw = pclose(pipe);
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return result;
}

std::vector<std::vector<std::string>> data_rows(const std::string& csv) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream stream(csv);
  std::string line;
  bool seen_header = false;
  while (std::getline(stream, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!seen_header) {
      seen_header = true;
      continue;
    }
    std::vector<std::string> cells;
    std::istringstream cellstream(line);
    std::string cell;
    while (std::getline(cellstream, cell, ',')) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  return rows;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("entropy: single row matches the library value") {
  const auto result = run_cli("entropy --h 0.5 --lambda 1.3 --L 100");
  CHECK(result.status == 0);
  const auto rows = data_rows(result.output);
  REQUIRE(rows.size() == 1);
  REQUIRE(rows[0].size() == 6);
  CHECK(rows[0][0] == "0.5");
  CHECK(rows[0][2] == "100");
  CHECK(rows[0][3] == xxc::format_sig(xxc::entropy_pipeline({0.5, 1.3}, 100).nats));
  CHECK(rows[0][4] == "2");
  CHECK(rows[0][5] == "Phase2");
}

TEST_CASE("entropy: identical configs produce identical bytes") {
  const std::string args = "entropy --h 0.3,0.5 --lambda 0,1.3 --L 4,16,32";
  const auto first = run_cli(args);
  const auto second = run_cli(args);
  CHECK(first.status == 0);
  CHECK(first.output == second.output);
  CHECK(data_rows(first.output).size() == 12);
}

TEST_CASE("entropy: the polarized strip is an all-zero column") {
  const auto result = run_cli("entropy --h 1.5 --lambda 0 --L 1:50");
  CHECK(result.status == 0);
  const auto rows = data_rows(result.output);
  REQUIRE(rows.size() == 50);
  for (const auto& row : rows) CHECK(row[3] == "0");
}

TEST_CASE("entropy: bits flag rescales by ln 2") {
  const auto nats = run_cli("entropy --h 0.5 --lambda 0 --L 64");
  const auto bits = run_cli("entropy --h 0.5 --lambda 0 --L 64 --bits");
  const double s_nats = std::stod(data_rows(nats.output)[0][3]);
  const double s_bits = std::stod(data_rows(bits.output)[0][3]);
  CHECK(s_bits == doctest::Approx(s_nats / std::numbers::ln2).epsilon(1e-10));
}

TEST_CASE("entropy: json output parses and mirrors the csv cells") {
  const auto result = run_cli("entropy --h 0.5 --lambda 1.3 --L 32 --format json");
  CHECK(result.status == 0);
  const auto doc = nlohmann::json::parse(result.output);
  CHECK(doc["tool"] == "xxcurrent");
  CHECK(doc["rows"].size() == 1);
  CHECK(doc["rows"][0][2] == 32);
  CHECK(doc["rows"][0][5] == "Phase2");
}

TEST_CASE("invalid configurations exit with code 2") {
  CHECK(run_cli("entropy --h -1 --lambda 0 --L 4").status == 2);
  CHECK(run_cli("entropy --h 0.5 --lambda 0").status == 2);
  CHECK(run_cli("entropy --h 0.5 --lambda 0 --L 0:4").status == 2);
  CHECK(run_cli("bogus-subcommand").status == 2);
  CHECK(run_cli("oracle --N 40 --h 0.5 --lambda 0 --L 1").status == 2);
}

TEST_CASE("fit self-test recovers synthetic data exactly") {
  const auto result = run_cli("fit --self-test");
  CHECK(result.status == 0);
  CHECK(result.output.find("PASS") != std::string::npos);
}

TEST_CASE("geometric grids and pairs through the entropy command") {
  const auto result = run_cli("entropy --h 0.5 --lambda 0 --L-geom 8:6:64 --pairs");
  CHECK(result.status == 0);
  const auto rows = data_rows(result.output);
  CHECK(rows.size() == 12);  // 6 grid points + parity partners
  CHECK(rows.front()[2] == "8");
  CHECK(rows.back()[2] == "65");
}

TEST_CASE("fit window flag narrows the fit") {
  const auto result =
      run_cli("fit --h 0.5 --lambda 0 --L-geom 16:10:128 --window 32:128");
  CHECK(result.status == 0);
  const auto rows = data_rows(result.output);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0][4] == "32");
  CHECK(rows[0][5] == "128");
}

TEST_CASE("tolerance violations exit with code 4") {
  CHECK(run_cli("oracle --N 8 --h 0.5 --lambda 1.3 --L 1:4 --tol 1e-20").status == 4);
}

TEST_CASE("fit: symmetric-line rows carry the closed-form offset column") {
  const auto result =
      run_cli("fit --h 0.6 --lambda 1.66666666666666667 --L-geom 24:12:256");
  CHECK(result.status == 0);
  const auto rows = data_rows(result.output);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0][9] != "nan");   // s0_analytic
  CHECK(rows[0][10] != "nan");  // s0_delta
  CHECK(std::stod(rows[0][9]) == doctest::Approx(0.714476187678).epsilon(1e-9));
  // off the line the column is empty
  const auto off = run_cli("fit --h 0.5 --lambda 1.3 --L-geom 24:12:256");
  CHECK(data_rows(off.output)[0][9] == "nan");
}

TEST_CASE("oracle: matched sectors agree and report exit 0") {
  const auto result = run_cli("oracle --N 10 --h 0.5 --lambda 1.3 --L 1:5");
  CHECK(result.status == 0);
  const auto rows = data_rows(result.output);
  REQUIRE(rows.size() == 5);
  for (const auto& row : rows) CHECK(std::stod(row[7]) <= 1e-8);
}

TEST_CASE("oracle: degenerate points exit with code 5") {
  CHECK(run_cli("oracle --N 10 --h 1 --lambda 0 --L 1:2").status == 5);
  CHECK(run_cli("oracle --N 10 --h 1 --lambda 0 --L 1:2 --perturb").status == 0);
}

TEST_CASE("oracle: trivial product state matches at N = 2") {
  const auto result = run_cli("oracle --N 2 --h 2 --lambda 0 --L 1");
  CHECK(result.status == 0);
  const auto rows = data_rows(result.output);
  REQUIRE(rows.size() == 1);
  CHECK(std::stod(rows[0][5]) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(std::stod(rows[0][6]) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("collapse: small smoke run with the x = 0 anchor row") {
  const auto result = run_cli(
      "collapse --transition kh-klambda --h 0.5 --L 64 --x-max 4 --points 4 "
      "--spread-tol 1");
  CHECK(result.status == 0);
  const auto rows = data_rows(result.output);
  REQUIRE(rows.size() == 9);
  bool saw_zero = false;
  for (const auto& row : rows)
    if (row[4] == "0") {
      saw_zero = true;
      CHECK(row[5] == "0");
    }
  CHECK(saw_zero);
}

TEST_SUITE_END();
