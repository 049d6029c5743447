#include "cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

namespace casimir::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

TEST(Cli, PressureJson) {
  const auto r = invoke({"pressure", "--config", "cp", "--cutoff", "exp", "--l", "1", "--json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto doc = Json::parse(r.out);
  EXPECT_EQ(doc["schema_version"], kSchemaVersion);
  EXPECT_EQ(doc["units"], "natural");
  EXPECT_NEAR(doc["D_star"].get<double>(), 0.0145833, 1e-7);
  EXPECT_NEAR(doc["P_physical"].get<double>(), 0.0114537, 1e-7);
  EXPECT_EQ(doc["verdict"], "repulsion");
  EXPECT_EQ(doc["D_of_a"].size(), 5u);
  EXPECT_FALSE(doc.contains("em_oracle"));
}

TEST(Cli, JsonRoundTrips) {
  const auto r = invoke({"--json", "pressure", "--config", "cc", "--cutoff", "gauss", "--oracle",
                         "em"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto doc = Json::parse(r.out);
  EXPECT_EQ(doc.dump(2) + "\n", r.out);
  EXPECT_EQ(Json::parse(doc.dump()), doc);
  EXPECT_EQ(doc["em_oracle"]["variant"], "integer");
  EXPECT_DOUBLE_EQ(doc["em_oracle"]["limit"].get<double>(), -1.0 / 60);
  EXPECT_EQ(doc["verdict"], "attraction");
}

TEST(Cli, PressureCsvAndTable) {
  const auto csv = invoke({"--csv", "pressure", "--config", "cp", "--a-grid", "0.4,0.2,0.1"});
  ASSERT_EQ(csv.code, kOk) << csv.err;
  const auto rows = parse_csv(csv.out);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"a", "D", "tail_bound"}));
  EXPECT_EQ(rows[1][0], "0.4");
  EXPECT_EQ(rows[4][0], "0");
  EXPECT_NEAR(std::stod(rows[4][1]), 7.0 / 480, 1e-6);

  const auto table = invoke({"pressure", "--config", "cp"});
  ASSERT_EQ(table.code, kOk);
  EXPECT_NE(table.out.find("verdict"), std::string::npos);
  EXPECT_NE(table.out.find("repulsion"), std::string::npos);
}

TEST(Cli, SiUnits) {
  const auto nat = Json::parse(invoke({"--json", "pressure", "--config", "cp"}).out);
  const auto si =
      Json::parse(invoke({"--json", "--units", "si", "pressure", "--config", "cp", "--l", "1e-6"}).out);
  EXPECT_EQ(si["units"], "si");
  EXPECT_EQ(si["P_unit"], "Pa");
  // hbar c pi / 4 * D / l^4 with l = 1 um
  const double expect = nat["P_physical"].get<double>() * 1.054571817e-34 * 299792458.0 / 1e-24;
  EXPECT_NEAR(si["P_physical"].get<double>(), expect, 1e-12 * expect);
}

TEST(Cli, DensityMatchesStaircase) {
  const auto r = invoke({"density", "--config", "cc", "--l", "1", "--omega-max", "5",
                         "--samples", "10"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 11u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"omega_over_omega0", "rho_ratio"}));
  for (int i = 1; i <= 10; ++i) {
    const double x = 0.5 * i / std::numbers::pi;
    EXPECT_NEAR(std::stod(rows[i][0]), x, 1e-15);
    EXPECT_NEAR(std::stod(rows[i][1]), (0.5 + std::floor(x)) / x, 1e-14) << i;
  }
  EXPECT_TRUE(r.err.empty());
}

TEST(Cli, DensityThresholdWarns) {
  // omega0 = pi / 2, so omega = pi hits the cc threshold x = 2
  const auto r = invoke({"density", "--config", "cc", "--l", "2", "--omega-max",
                         "3.141592653589793", "--samples", "1"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_NE(r.err.find("threshold"), std::string::npos);
  EXPECT_EQ(parse_csv(r.out)[1][1], "1");  // (1/2 + 1 + 1/2) / 2
}

TEST(Cli, Convexity) {
  const auto r = invoke({"--csv", "convexity", "--cutoff", "exp", "--a", "0.2", "--n", "20"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 21u);
  EXPECT_EQ(rows[0].back(), "class");
  EXPECT_EQ(rows[1].back(), "convex");
  EXPECT_EQ(rows[5].back(), "concave");
  const auto doc = Json::parse(invoke({"--json", "convexity", "--a", "0.2"}).out);
  EXPECT_NEAR(doc["total"].get<double>(), 0.0145321867709049, 1e-10);
}

TEST(Cli, StressZero) {
  const auto r = invoke({"stress", "--C", "0"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("no force"), std::string::npos);
  EXPECT_EQ(r.out.find("-0"), std::string::npos);
  const auto doc = Json::parse(invoke({"--json", "stress", "--C", "0"}).out);
  for (const auto& row : doc["tensor"]) {
    for (const auto& v : row) EXPECT_EQ(v.get<double>(), 0.0);
  }
  EXPECT_EQ(doc["verdict"], "no force");
}

TEST(Cli, StressFromPressure) {
  const auto path = std::filesystem::temp_directory_path() / "casimir_cli_test_pressure.json";
  {
    std::ofstream f(path);
    f << invoke({"--json", "pressure", "--config", "cc"}).out;
  }
  const auto doc = Json::parse(invoke({"--json", "stress", "--from-pressure", path.string()}).out);
  EXPECT_GT(doc["C"].get<double>(), 0.0);
  EXPECT_LT(doc["energy_density"].get<double>(), 0.0);
  EXPECT_EQ(doc["verdict"], "attraction");
  std::filesystem::remove(path);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args{"--json", "pressure", "--config", "cp", "--cutoff", "rat:8"};
  const auto first = invoke(args);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(invoke(args).out, first.out);
  const std::vector<std::string> serial{"--json", "pressure", "--config", "cp", "--cutoff",
                                        "rat:8", "--serial"};
  EXPECT_EQ(invoke(serial).out, first.out);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(invoke({}).code, kUsage);
  EXPECT_EQ(invoke({"pressure", "--config", "cp", "--bogus"}).code, kUsage);
  EXPECT_EQ(invoke({"pressure", "--config", "xx"}).code, kUsage);
  EXPECT_EQ(invoke({"--json", "--csv", "stress", "--C", "1"}).code, kUsage);
  EXPECT_EQ(invoke({"stress"}).code, kUsage);
  EXPECT_EQ(invoke({"stress", "--C", "1", "--from-pressure", "x"}).code, kUsage);
  EXPECT_EQ(invoke({"pressure", "--config", "cp", "--a-grid", "0.1,zz"}).code, kUsage);
  EXPECT_EQ(invoke({"pressure", "--config", "cp", "--cutoff", "rat:3"}).code, kDomain);
  EXPECT_EQ(invoke({"pressure", "--config", "cp", "--a-grid", "0.1,0.2"}).code, kDomain);
  EXPECT_EQ(invoke({"convexity", "--a", "-1"}).code, kDomain);
  EXPECT_EQ(invoke({"pressure", "--config", "cp", "--l", "0"}).code, kDomain);
  EXPECT_EQ(invoke({"density", "--config", "cp", "--omega-max", "-2"}).code, kDomain);
  EXPECT_EQ(invoke({"stress", "--from-pressure", "/nonexistent/p.json"}).code, kInput);
  const auto help = invoke({"--help"});
  EXPECT_EQ(help.code, kOk);
  EXPECT_NE(help.out.find("Exit codes"), std::string::npos);
}

}  // namespace
}  // namespace casimir::cli
