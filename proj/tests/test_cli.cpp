#include <gtest/gtest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "vnet/net.hpp"
#include "vnet/quality.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = vnet::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name) {
  return fs::temp_directory_path() / ("vnet_cli_test_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST(Cli, ConstructExplicitHasZeroQuality) {
  const CliRun r = run({"construct", "--q", "3", "--m", "2", "--s", "4", "--explicit"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["t"], 0);
  EXPECT_EQ(j["rho"], 2);
  EXPECT_EQ(j["checks"]["equidist"], true);
  EXPECT_EQ(j["f"], "1,0,1");
  EXPECT_EQ(j["alpha"].size(), 4u);
}

TEST(Cli, DegenerateAlphaDoesNotFail) {
  const CliRun r = run({"construct", "--q", "2", "--m", "3", "--alpha", "0,0"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["t"], 3);
  EXPECT_EQ(j["rho"], 0);
  EXPECT_EQ(j["consistent"], true);
}

TEST(Cli, PointsFileRoundTrips) {
  const fs::path path = temp_file("points.csv");
  const CliRun r = run({"construct", "--q", "2", "--m", "4", "--alpha", "2,7,11", "--points", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["points"]["count"], 16);
  std::ifstream in(path);
  const vnet::NetPointSet pts = vnet::read_points_csv(in);
  EXPECT_EQ(pts.size(), 16u);
  EXPECT_EQ(pts.s, 3u);

  const CliRun csv = run({"points", "--q", "2", "--m", "4", "--alpha", "2,7,11", "--format", "csv"});
  ASSERT_EQ(csv.code, 0);
  std::ifstream again(path);
  std::stringstream file;
  file << again.rdbuf();
  EXPECT_EQ(csv.out, file.str());
  fs::remove(path);
}

TEST(Cli, PointsJsonMatchesCsv) {
  const CliRun j = run({"points", "--q", "3", "--m", "2", "--alpha", "3,4"});
  ASSERT_EQ(j.code, 0) << j.err;
  const json doc = json::parse(j.out);
  EXPECT_EQ(doc["den"], 9);
  EXPECT_EQ(doc["numerators"].size(), 9u);
  const CliRun f = run({"points", "--q", "3", "--m", "2", "--alpha", "3,4", "--format", "csv", "--float"});
  ASSERT_EQ(f.code, 0);
  EXPECT_NE(f.out.find("0.33333333333333331"), std::string::npos);
}

TEST(Cli, AnalyzeConsistencyAndBound) {
  const CliRun r = run({"analyze", "--q", "2", "--m", "3", "--alpha", "2,5", "--exact-dstar"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["t"].get<int>() + j["rho"].get<int>(), 3);
  EXPECT_LE(j["d_star_exact"]["value"].get<double>(), j["disc_bound"].get<double>());
  EXPECT_EQ(j["d_star_within_bound"], true);
  EXPECT_EQ(j["term_count"], 7);
  EXPECT_FALSE(j.contains("cap_hit"));
}

TEST(Cli, AnalyzeCapGivesPartialReport) {
  const CliRun r = run({"analyze", "--q", "2", "--m", "4", "--alpha", "2,3,5", "--cap-kernel", "16"});
  EXPECT_EQ(r.code, 3);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["t"].is_number(), true);
  EXPECT_TRUE(j["rho"].is_null());
  EXPECT_TRUE(j["r_q"].is_null());
  EXPECT_EQ(j["cap_hit"]["rho"], true);
  EXPECT_EQ(j["cap_hit"]["r_q"], true);
}

TEST(Cli, AnalyzeGeneralNetAndPrimePower) {
  const CliRun g = run({"analyze", "--q", "2", "--modulus", "0,0,1", "--gpolys", "0,1;1,1"});
  ASSERT_EQ(g.code, 0) << g.err;
  const json j = json::parse(g.out);
  EXPECT_EQ(j["source"], "general");
  EXPECT_TRUE(j["r_q"].is_number());
  EXPECT_FALSE(j.contains("rho"));

  const CliRun p = run({"analyze", "--q", "4", "--m", "2", "--alpha", "4,5"});
  ASSERT_EQ(p.code, 0) << p.err;
  const json k = json::parse(p.out);
  EXPECT_TRUE(k["r_q"].is_null());
  EXPECT_EQ(k["base_modulus"], "1,1,1");
  EXPECT_EQ(k["consistent"], true);
}

TEST(Cli, CbcReports) {
  const CliRun r = run({"cbc", "--q", "2", "--m", "3", "--s", "3", "--strict"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["per_dim_rq"][0], 0.0);
  EXPECT_EQ(j["seed"], "irreducible");
  EXPECT_EQ(j["alpha"][0], 2);
  for (auto& ok : j["bound_ok"]) EXPECT_EQ(ok, true);

  const CliRun bad = run({"cbc", "--q", "2", "--m", "3", "--s", "3", "--seed", "explicit"});
  EXPECT_EQ(bad.code, 2);
  const CliRun good = run({"cbc", "--q", "2", "--m", "3", "--s", "4", "--seed", "explicit"});
  ASSERT_EQ(good.code, 0) << good.err;
  EXPECT_EQ(json::parse(good.out)["seed"], "explicit");
  EXPECT_EQ(run({"cbc", "--q", "4", "--m", "2", "--s", "2"}).code, 2);
}

TEST(Cli, CbcThreadInvariant) {
  const CliRun one = run({"cbc", "--q", "3", "--m", "2", "--s", "4", "--threads", "1"});
  const CliRun many = run({"cbc", "--q", "3", "--m", "2", "--s", "4", "--threads", "8"});
  ASSERT_EQ(one.code, 0);
  EXPECT_EQ(one.out, many.out);
}

TEST(Cli, BoundsGrid) {
  const CliRun r = run({"bounds", "--q", "2", "--m", "1..8", "--s", "1..4", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "q,m,s,sigma,delta,corollary_floor,average_bound");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    std::vector<std::string> f;
    std::stringstream ls(line);
    for (std::string x; std::getline(ls, x, ',');) f.push_back(x);
    ASSERT_EQ(f.size(), 7u);
    const unsigned m = std::stoul(f[1]), s = std::stoul(f[2]), sigma = std::stoul(f[3]);
    EXPECT_LE(sigma, m);
    EXPECT_EQ(f[4], vnet::delta_q(2, s, sigma).str());
  }
  EXPECT_EQ(rows, 32);

  const CliRun j = run({"bounds", "--q", "2,3", "--m", "4", "--s", "2"});
  ASSERT_EQ(j.code, 0);
  const json doc = json::parse(j.out);
  EXPECT_EQ(doc["rows"].size(), 2u);
  EXPECT_EQ(doc["rows"][0]["sigma"], 2);
}

TEST(Cli, OutFlagWritesFile) {
  const fs::path path = temp_file("report.json");
  const CliRun r = run({"construct", "--q", "2", "--m", "2", "--alpha", "2,2", "--out", path.string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  EXPECT_EQ(json::parse(in)["t"], 0);
  fs::remove(path);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"construct", "--q", "2", "--m", "3"}).code, 2);                          // no source
  EXPECT_EQ(run({"construct", "--q", "6", "--m", "2", "--alpha", "1"}).code, 2);          // not a prime power
  EXPECT_EQ(run({"construct", "--q", "2", "--m", "2", "--s", "4", "--explicit"}).code, 2);  // s > q + 1
  EXPECT_EQ(run({"construct", "--q", "2", "--m", "2", "--alpha", "9"}).code, 2);          // out of range
  EXPECT_EQ(run({"construct", "--q", "2", "--modulus", "1,0,1", "--alpha", "1"}).code, 2);  // reducible
  EXPECT_EQ(run({"construct", "--q", "2", "--m", "3", "--modulus", "1,1,1", "--alpha", "1"}).code, 2);
  EXPECT_EQ(run({"construct", "--q", "2", "--m", "2", "--alpha", "1", "--format", "csv"}).code, 2);
  EXPECT_EQ(run({"bounds", "--q", "2", "--m", "3..1", "--s", "1"}).code, 2);
  EXPECT_EQ(run({"cbc", "--q", "2", "--m", "2", "--s", "2", "--threads", "0"}).code, 2);
  EXPECT_EQ(run({"construct", "--help"}).code, 0);
}

TEST(Cli, CapExitCode) {
  EXPECT_EQ(run({"points", "--q", "2", "--m", "8", "--alpha", "2", "--cap-points", "16"}).code, 3);
  EXPECT_EQ(run({"cbc", "--q", "2", "--m", "6", "--s", "2", "--cap-kernel", "100"}).code, 3);
}
