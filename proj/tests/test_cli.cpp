#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include <json.hpp>

#include "qseries/cli.hpp"

namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::vector<Json> lines;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Result r{qseries::cli::run(args, out, err), {}, out.str(), err.str()};
  std::istringstream in(r.out);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) r.lines.push_back(Json::parse(line));
  return r;
}

std::vector<Json> of_kind(const Result& r, const std::string& kind) {
  std::vector<Json> v;
  for (const auto& j : r.lines)
    if (j.value("kind", "") == kind) v.push_back(j);
  return v;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("qseries_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()) + "_" +
            std::to_string(::getpid()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, PartitionSeries) {
  auto r = run({"pseries", "--m", "13", "--N", "10", "--fps", path("p.fps")});
  ASSERT_EQ(r.code, 0) << r.err;
  ASSERT_EQ(r.lines.size(), 1u);
  EXPECT_EQ(r.lines[0]["kind"], "pseries");
  EXPECT_EQ(r.lines[0]["coefficients"], Json({1, 1, 2, 3, 5, 7, 11, 2, 9, 4}));
  EXPECT_TRUE(fs::exists(path("p.fps")));
}

TEST_F(CliTest, FSeriesRoutesAndCache) {
  auto cache = path("cache");
  auto a = run({"--cache-dir", cache, "fseries", "--m", "13", "--k", "1", "--N", "60", "--route", "eta"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.lines[0]["coefficients"][11], 11);
  EXPECT_EQ(a.lines[0]["coefficients"][35], 9);
  auto cached = fs::path(cache) / "f_m13_k1_N60.fps";
  ASSERT_TRUE(fs::exists(cached));
  auto b = run({"--cache-dir", cache, "fseries", "--m", "13", "--k", "1", "--N", "60", "--route", "eta"});
  EXPECT_EQ(a.out, b.out);

  { std::ofstream(cached, std::ios::binary | std::ios::trunc) << "FPS1 broken"; }
  auto c = run({"--cache-dir", cache, "fseries", "--m", "13", "--k", "1", "--N", "60", "--route", "eta"});
  EXPECT_EQ(c.code, 0) << c.err;
  EXPECT_EQ(a.out, c.out);

  auto d = run({"fseries", "--m", "13", "--k", "2", "--N", "60", "--route", "iterate"});
  ASSERT_EQ(d.code, 0);
  EXPECT_EQ(d.lines[0]["coefficients"][23], 10);
}

TEST_F(CliTest, RerunWithWarmCacheIsByteIdentical) {
  auto cache = path("cache");
  std::vector<std::string> args{"--cache-dir", cache, "--out", path("cold.jsonl"), "cycle", "--m", "13", "--N", "2000"};
  ASSERT_EQ(run(args).code, 0);
  args[3] = path("warm.jsonl");
  ASSERT_EQ(run(args).code, 0);
  std::ifstream cold(path("cold.jsonl")), warm(path("warm.jsonl"));
  std::stringstream cs, ws;
  cs << cold.rdbuf();
  ws << warm.rdbuf();
  EXPECT_FALSE(cs.str().empty());
  EXPECT_EQ(cs.str(), ws.str());
  auto j = Json::parse(cs.str());
  EXPECT_EQ(j["period"], 24);
  EXPECT_EQ(j["preperiod"], 0);
  EXPECT_EQ(j["mode"], "HEURISTIC");
}

TEST_F(CliTest, ScanAndVerify) {
  auto s = run({"scan", "--m", "13", "--lmin", "5", "--lmax", "60", "--mode", "rigorous", "--derive"});
  ASSERT_EQ(s.code, 0) << s.err;
  auto summary = of_kind(s, "scan_summary");
  ASSERT_EQ(summary.size(), 1u);
  EXPECT_EQ(summary[0]["hits"], Json({59}));
  EXPECT_EQ(summary[0]["bound"], 528);
  std::uint64_t last = 0;
  for (const auto& h : of_kind(s, "hecke")) {
    EXPECT_GT(h["ell"].get<std::uint64_t>(), last);
    last = h["ell"];
  }

  {
    std::ofstream f(path("claims.jsonl"));
    f << s.out;
  }
  auto v = run({"verify-claims", path("claims.jsonl"), "--nmax", "20"});
  EXPECT_EQ(v.code, 0) << v.err;
  auto claims = of_kind(v, "claim");
  EXPECT_EQ(claims.size(), 59u);
  bool saw = false;
  for (const auto& c : claims) {
    EXPECT_NE(c["status"], "FAIL");
    if (c["B"] == 111247 && c["A"] == 13ull * 59 * 59 * 59 * 59) {
      saw = true;
      EXPECT_EQ(c["status"], "PARTIAL");
      EXPECT_EQ(c["verified_to"], 0);
    }
  }
  EXPECT_TRUE(saw);

  auto t = run({"scan", "--m", "13", "--lmin", "5", "--lmax", "30", "--mode", "truncated", "--trunc", "50"});
  ASSERT_EQ(t.code, 0) << t.err;
  EXPECT_EQ(of_kind(t, "scan_summary")[0]["mode"], "HEURISTIC");
}

TEST_F(CliTest, FalseClaimFails) {
  {
    std::ofstream f(path("bad.jsonl"));
    f << R"({"m": 7, "A": 7, "B": 1, "target": 0, "side_condition": "none"})" << "\n";
    f << R"({"m": 5, "A": 5, "B": 4, "target": 0, "side_condition": "none"})" << "\n";
  }
  auto v = run({"verify-claims", path("bad.jsonl"), "--nmax", "50"});
  EXPECT_EQ(v.code, 1);
  ASSERT_EQ(v.lines.size(), 2u);
  EXPECT_EQ(v.lines[0]["status"], "FAIL");
  EXPECT_EQ(v.lines[0]["counterexample"]["n"], 0);
  EXPECT_EQ(v.lines[0]["provenance"]["mode"], "EXTERNAL");
  EXPECT_EQ(v.lines[1]["status"], "PASS");
}

TEST_F(CliTest, OtherCommands) {
  auto g = run({"good-prime", "--m", "13"});
  ASSERT_EQ(g.code, 0) << g.err;
  EXPECT_EQ(g.lines[0]["complete"], true);
  EXPECT_EQ(g.lines[0]["reverified"], true);

  auto c = run({"census", "--m", "5", "--X", "10000"});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_EQ(c.lines[0]["kind"], "census");

  auto s4 = run({"section4", "--m", "13"});
  ASSERT_EQ(s4.code, 0) << s4.err;
  EXPECT_EQ(of_kind(s4, "identity_summary")[0]["result"], "PASS");

  auto co = run({"corollary", "--which", "9", "--nmax", "10"});
  ASSERT_EQ(co.code, 0) << co.err;
  EXPECT_EQ(of_kind(co, "corollary_summary")[0]["failed"], 0);

  auto sp = run({"spot-checks"});
  ASSERT_EQ(sp.code, 0) << sp.err;
  EXPECT_FALSE(of_kind(sp, "spot_check").empty());

  auto e = run({"eigen", "--m", "13", "--lmin", "5", "--lmax", "20"});
  ASSERT_EQ(e.code, 0) << e.err;
  EXPECT_FALSE(of_kind(e, "eigen").empty());
}

TEST_F(CliTest, UsageAndRuntimeErrors) {
  for (std::vector<std::string> args : {std::vector<std::string>{}, {"frobnicate"}, {"scan", "--mode", "sloppy"},
                                        {"corollary", "--which", "3"}, {"pseries", "--m", "x"}}) {
    auto r = run(args);
    EXPECT_EQ(r.code, 2);
    auto j = Json::parse(r.err);
    EXPECT_EQ(j["error"], "usage");
    EXPECT_TRUE(j.contains("message"));
  }
  auto bad_m = run({"pseries", "--m", "12"});
  EXPECT_EQ(bad_m.code, 2);
  EXPECT_EQ(Json::parse(bad_m.err)["error"], "modulus");
  auto budget = run({"--budget", "100", "fseries", "--m", "13", "--N", "500"});
  EXPECT_EQ(budget.code, 2);
  EXPECT_EQ(Json::parse(budget.err)["error"], "budget");
  auto missing = run({"verify-claims", path("nope.jsonl")});
  EXPECT_EQ(missing.code, 2);
  {
    std::ofstream f(path("garbage.jsonl"));
    f << "{not json\n";
  }
  auto garbage = run({"verify-claims", path("garbage.jsonl")});
  EXPECT_EQ(garbage.code, 2);
  EXPECT_EQ(Json::parse(garbage.err)["error"], "format");
}
