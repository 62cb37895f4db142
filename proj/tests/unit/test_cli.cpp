#include <gtest/gtest.h>

#include <json.hpp>

#include "cli.hpp"

using rootpoly::cli::run;
using json = nlohmann::json;

namespace {

json payload_of(const std::vector<std::string>& args) {
  const auto r = run(args);
  EXPECT_EQ(r.exit_code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("schema_version"), 1);
  return j.at("payload");
}

}  // namespace

TEST(Cli, InfoA2) {
  const json p = payload_of({"info", "A2", "--json"});
  EXPECT_EQ(p["rank"], 2);
  EXPECT_EQ(p["num_roots"], 6);
  EXPECT_EQ(p["theta"], json::array({1, 1}));
  EXPECT_EQ(p["marks"], json::array({1, 1}));
  EXPECT_EQ(p["weyl_group_order"], 6);
  EXPECT_TRUE(p["simply_laced"]);
}

TEST(Cli, InfoG2) {
  const json p = payload_of({"info", "G2", "--json"});
  EXPECT_EQ(p["num_long"], 6);
  EXPECT_EQ(p["num_short"], 6);
  EXPECT_EQ(p["theta"], json::array({3, 2}));
  EXPECT_EQ(p["theta_short"], json::array({2, 1}));
  EXPECT_EQ(p["cartan"], json::parse("[[2,-1],[-3,2]]"));
}

TEST(Cli, LargeIntegersBecomeStrings) {
  const json p = payload_of({"info", "A20", "--json"});
  EXPECT_EQ(p["weyl_group_order"], "51090942171709440000");
  EXPECT_TRUE(payload_of({"info", "A5", "--json"})["weyl_group_order"].is_number());
}

TEST(Cli, FacesWithIndexSet) {
  const json p = payload_of({"faces", "B9", "--I", "5,7", "--json"});
  EXPECT_EQ(p["I"], json::array({5, 7}));
  EXPECT_EQ(p["face"]["closure"], json::array({5, 6, 7, 8, 9}));
  EXPECT_EQ(p["face"]["border"], json::array({5}));
  EXPECT_EQ(p["face"]["dim"], 4);
  EXPECT_EQ(p["stabilizer"]["pointwise"], json::array({6, 7, 8, 9}));
  EXPECT_EQ(p["stabilizer"]["faithful"], json::array({1, 2, 3, 4}));
  EXPECT_EQ(p["face"]["num_vertices"], p["vertex_count_formula"]);
  for (const json& b : p["face"]["barycenter"]) EXPECT_TRUE(b.is_string());
}

TEST(Cli, FacesCensus) {
  const json p = payload_of({"faces", "A2", "--json"});
  EXPECT_EQ(p["count"], 3);
  EXPECT_EQ(p["faces"].size(), 3u);
  EXPECT_EQ(p["faces"][0]["dim"], 0);
  EXPECT_EQ(p["faces"][0]["orbit_size"], 6);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).exit_code, 1);
  EXPECT_EQ(run({"info", "Z9"}).exit_code, 1);
  EXPECT_EQ(run({"info", "B1"}).exit_code, 1);
  EXPECT_EQ(run({"frobnicate", "A2"}).exit_code, 1);
  EXPECT_EQ(run({"faces", "A2", "--I", "3"}).exit_code, 1);
  EXPECT_EQ(run({"faces", "A2", "--I", "x"}).exit_code, 1);
  EXPECT_EQ(run({"hrep", "A2", "--limit", "0"}).exit_code, 1);
  EXPECT_EQ(run({"shortface", "A2"}).exit_code, 1);
  EXPECT_EQ(run({"skeleton", "A1"}).exit_code, 1);
  EXPECT_EQ(run({"--help"}).exit_code, 0);
}

TEST(Cli, FPolynomialText) {
  const auto r = run({"fpoly", "A2"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "[6, 6, 1]\n");
  const json p = payload_of({"fpoly", "E8", "--json"});
  EXPECT_EQ(p["f_vector"][7], 19440);
}

TEST(Cli, HRepresentation) {
  const json p = payload_of({"hrep", "C2", "--json"});
  EXPECT_EQ(p["mode"], "explicit");
  EXPECT_EQ(p["classes"].size(), 1u);
  EXPECT_EQ(p["inequalities"].size(), 4u);
  const json e8 = payload_of({"hrep", "E8", "--limit", "100", "--json"});
  EXPECT_EQ(e8["mode"], "symbolic");
  EXPECT_FALSE(e8.contains("inequalities"));
  EXPECT_EQ(e8["total"], 19440);
}

TEST(Cli, VerifyAndRefuse) {
  const json p = payload_of({"verify", "F4", "--json"});
  EXPECT_TRUE(p["ok"]);
  EXPECT_EQ(p["oracle_f_vector"], json::array({24, 96, 96, 24}));
  EXPECT_EQ(p["partner"], "D4");
  const auto e6 = run({"verify", "E6"});
  EXPECT_EQ(e6.exit_code, 3);
  EXPECT_NE(e6.err.find("refused"), std::string::npos);
  EXPECT_EQ(run({"verify", "B3", "--max-rank", "2"}).exit_code, 3);
}

TEST(Cli, DiagramSkeletonShortface) {
  const json d = payload_of({"diagram", "C3", "--json"});
  EXPECT_EQ(d["facet_indices"], json::array({3}));
  EXPECT_EQ(d["diagram"], "@0=>=o1---o2=<=x3\n");
  EXPECT_EQ(payload_of({"skeleton", "C3", "--json"})["class"], "doubled_short_edges");
  EXPECT_EQ(payload_of({"skeleton", "E6", "--json"})["class"], "long_edges");
  const json s = payload_of({"shortface", "G2", "--json"});
  EXPECT_TRUE(s["interior"]);
  EXPECT_EQ(s["dim"], 2);
}

TEST(Cli, JsonIsDeterministicAndSorted) {
  for (const char* cmd : {"info", "faces", "fpoly", "hrep", "diagram", "skeleton", "shortface"}) {
    const auto a = run({cmd, "B4", "--json"});
    const auto b = run({cmd, "B4", "--json"});
    ASSERT_EQ(a.exit_code, 0) << cmd << a.err;
    EXPECT_EQ(a.out, b.out) << cmd;
    const json j = json::parse(a.out);
    EXPECT_EQ(j.dump(2) + "\n", a.out) << cmd;
    EXPECT_EQ(j["type"], "B4");
    EXPECT_EQ(j["command"], cmd);
  }
}
