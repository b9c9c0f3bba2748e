#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.h"
#include "fullex/families.h"
#include "fullex/planar_code.h"
#include "support.h"

namespace fullex {
namespace {

using nlohmann::json;

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int status = cli::run(args, in, out, err);
  return {status, out.str(), err.str()};
}

std::string plc(const PlaneCubicGraph& g) {
  return write_planar_code(std::span(&g, 1));
}

TEST(Cli, GenTubePipesIntoExtendCheck) {
  const Result tube = run({"gen-tube", "3"});
  ASSERT_EQ(tube.status, cli::kExitPass);
  const Result check = run({"extend-check", "--k", "2"}, tube.out);
  ASSERT_EQ(check.status, cli::kExitPass) << check.err;
  const json doc = json::parse(check.out);
  const json& g = doc["graphs"][0];
  EXPECT_EQ(g["report"]["extendable"], false);
  EXPECT_EQ(g["report"]["witness"].size(), 2u);
  EXPECT_EQ(g["tube"]["n_layers"], 3);
  EXPECT_TRUE(g["tube"]["witness_gap"].is_number());
}

TEST(Cli, GenTubeJsonDescriptor) {
  const Result r = run({"gen-tube", "2", "--json"});
  ASSERT_EQ(r.status, 0);
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["n"], 20);
  EXPECT_EQ(doc["traversed_edges"][0]["gap"], 1);
  EXPECT_EQ(doc["traversed_edges"].size(), 2u);
}

TEST(Cli, NonFullereneInputIsUsageError) {
  const Result r =
      run({"extend-check", "--k", "2"}, plc(testing::triangular_prism()));
  EXPECT_EQ(r.status, cli::kExitUsage);
  EXPECT_NE(r.err.find("BadFaceSize"), std::string::npos) << r.err;
}

TEST(Cli, MalformedInputIsUsageError) {
  EXPECT_EQ(run({"canonical"}, "garbage").status, cli::kExitUsage);
  EXPECT_EQ(run({"antikekule", "/nonexistent/file.plc"}).status,
            cli::kExitUsage);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).status, cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).status, cli::kExitUsage);
  EXPECT_EQ(run({"gen-tube", "0"}).status, cli::kExitUsage);
  EXPECT_EQ(run({"enumerate", "7"}).status, cli::kExitUsage);
  EXPECT_EQ(run({"extend-check", "--k", "9"}).status, cli::kExitUsage);
  EXPECT_EQ(run({"--help"}).status, cli::kExitPass);
}

TEST(Cli, ValidateReportsInvalidGraphs) {
  const std::vector<PlaneCubicGraph> both = {testing::cube(),
                                             testing::triangular_prism()};
  const Result r = run({"validate", "-"}, write_planar_code(both));
  EXPECT_EQ(r.status, cli::kExitCounterexample);
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["invalid"], 1);
  EXPECT_EQ(doc["graphs"][0]["valid"], true);
  EXPECT_EQ(doc["graphs"][1]["valid"], false);
  EXPECT_EQ(run({"validate"}, plc(testing::cube())).status, cli::kExitPass);
}

TEST(Cli, EnumerateWritesCatalogue) {
  const auto dir = std::filesystem::temp_directory_path() / "fullex_cli_enum";
  std::filesystem::remove_all(dir);
  const Result r = run({"enumerate", "12", "--out", dir.string()});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["total"], 2);
  std::ifstream file(dir / "fullerenes_n12.plc", std::ios::binary);
  std::stringstream bytes;
  bytes << file.rdbuf();
  EXPECT_EQ(read_planar_code(bytes.str()).size(), 2u);
  EXPECT_EQ(run({"enumerate", "12", "--plc"}).out, bytes.str());
  EXPECT_EQ(json::parse(run({"enumerate", "12", "--naive"}).out)["total"], 2);
  std::filesystem::remove_all(dir);
}

TEST(Cli, AntiKekuleOfCube) {
  const Result r = run({"antikekule"}, plc(testing::cube()));
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(json::parse(r.out)["graphs"][0]["anti_kekule"]["number"], 4);
}

TEST(Cli, CertifyTraversedPair) {
  const Tube t = build_tube(1);
  const auto& gap = t.descriptor.traversed_edges[0];
  const std::string edges = std::to_string(gap[0].u) + "-" +
                            std::to_string(gap[0].v) + "," +
                            std::to_string(gap[1].u) + "-" +
                            std::to_string(gap[1].v);
  const Result r = run({"certify", "--edges", edges}, plc(t.graph));
  ASSERT_EQ(r.status, 0) << r.err;
  const json g = json::parse(r.out)["graphs"][0];
  EXPECT_EQ(g["extends"], false);
  EXPECT_EQ(g["surplus"], 2);
  EXPECT_EQ(g["verified"], true);

  const Result by_index = run({"certify", "--edges", "0"}, plc(t.graph));
  ASSERT_EQ(by_index.status, 0);
  EXPECT_EQ(json::parse(by_index.out)["graphs"][0]["extends"], true);
}

TEST(Cli, CertifyRejectsBadEdges) {
  const std::string cube = plc(testing::cube());
  EXPECT_EQ(run({"certify", "--edges", "0-6"}, cube).status, cli::kExitUsage);
  EXPECT_EQ(run({"certify", "--edges", "99"}, cube).status, cli::kExitUsage);
  EXPECT_EQ(run({"certify", "--edges", "x-y"}, cube).status, cli::kExitUsage);
  const auto& e = testing::cube().edges();
  Edge a = e[0], b = e[0];
  for (const Edge& f : e) {
    if (f != a && (f.touches(a.u) || f.touches(a.v))) b = f;
  }
  const std::string overlapping = std::to_string(a.u) + "-" +
                                  std::to_string(a.v) + "," +
                                  std::to_string(b.u) + "-" +
                                  std::to_string(b.v);
  EXPECT_EQ(run({"certify", "--edges", overlapping}, cube).status,
            cli::kExitUsage);
}

TEST(Cli, CanonicalCodeIsInvariant) {
  std::mt19937 rng(8);
  const PlaneCubicGraph t = build_tube(2).graph;
  const json a = json::parse(run({"canonical"}, plc(t)).out);
  const json b =
      json::parse(run({"canonical"}, plc(testing::shuffled(t, rng))).out);
  EXPECT_EQ(a["graphs"][0]["code"], b["graphs"][0]["code"]);
}

TEST(Cli, VerifyAllIsDeterministicAcrossJobs) {
  const Result a = run({"verify-all", "--nmax", "14"});
  const Result b = run({"verify-all", "--nmax", "14", "--jobs", "3"});
  const Result c = run({"--jobs", "2", "verify-all", "--nmax", "14"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
  const json doc = json::parse(a.out);
  EXPECT_EQ(a.status, doc["verdict"] == "pass" ? cli::kExitPass
                                               : cli::kExitCounterexample);
}

TEST(Cli, VerifyAllBeyondBoundIsUsageError) {
  EXPECT_EQ(run({"verify-all", "--nmax", "300"}).status, cli::kExitUsage);
}

}  // namespace
}  // namespace fullex
