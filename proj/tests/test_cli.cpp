#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

#include "test_support.hpp"

namespace {

using nlohmann::json;
using testing_support::fixture_path;
using testing_support::run_cli;

json run_json(const std::string& args) {
  const auto r = run_cli(args + " --json");
  EXPECT_EQ(r.exit_code, 0) << args;
  return json::parse(r.out);
}

const json& vertex(const json& doc, const std::string& label) {
  for (const auto& v : doc.at("vertices")) {
    if (v.at("label") == label) return v;
  }
  throw std::runtime_error("no vertex " + label);
}

TEST(Cli, SsspJson) {
  const json d = run_json("sssp --input " + fixture_path("fig6.g") + " --source A");
  EXPECT_EQ(d["command"], "sssp");
  EXPECT_EQ(vertex(d, "B")["dist"], 1);
  EXPECT_EQ(vertex(d, "C")["dist"], 2);
  EXPECT_EQ(vertex(d, "D")["dist"], 4);
  EXPECT_EQ(vertex(d, "E")["dist"], 3);
  EXPECT_EQ(vertex(d, "D")["hops"], 2);
  EXPECT_TRUE(vertex(d, "A")["back"].is_null());
}

TEST(Cli, SdspJson) {
  const json d = run_json("sdsp --input " + fixture_path("fig6.g") + " --dest E");
  EXPECT_EQ(d["command"], "sdsp");
  EXPECT_EQ(vertex(d, "A")["dist"], 3);
  // A->B->E ties at 3; A->C is queued first.
  EXPECT_EQ(vertex(d, "A")["walk"], "A-(2)->C-(1)->E");
}

TEST(Cli, MstJson) {
  const json d = run_json("mst --input " + fixture_path("fig4.g") + " --stats");
  EXPECT_EQ(d["total_weight"], 19);
  EXPECT_EQ(d["edges"].size(), 10u);
  EXPECT_LE(d["stats"]["max_steps"].get<int>(), 12);
}

TEST(Cli, TraceText) {
  const auto r = run_cli("trace --input " + fixture_path("demo.g") + " --source A");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out.rfind("step=1 extract=A->D w=1 accept\nstep=2 extract=D->B w=2 accept\n", 0), 0u)
      << r.out;
  EXPECT_NE(r.out.find("step=16 "), std::string::npos);
}

TEST(Cli, TraceJsonWithWalk) {
  const json d = run_json("trace --input " + fixture_path("demo.g") + " --source A");
  ASSERT_EQ(d["events"].size(), 16u);
  EXPECT_EQ(d["events"][1]["queue"].size(), 6u);
  EXPECT_EQ(vertex(d, "E")["walk"], "E-(0)->G-(1)->F-(2)->D-(1)->A");
}

TEST(Cli, NonDefaultStride) {
  const json d = run_json("sssp --input " + fixture_path("fig6.g") + " --source A -k 8 -m 16");
  EXPECT_EQ(vertex(d, "D")["dist"], 4);
}

TEST(Cli, BenchIsDeterministic) {
  const auto a = run_cli("bench --n 2000 --seed 4 --json");
  const auto b = run_cli("bench --n 2000 --seed 4 --json");
  ASSERT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.out, b.out);
  const json d = json::parse(a.out);
  EXPECT_LE(d["workloads"][0]["steps"]["all"]["max_steps"].get<int>(), 12);
}

TEST(Cli, AnalyzeJson) {
  const json d = run_json("analyze --n 64 --trials 20 --seed 2");
  EXPECT_EQ(d["levels"].size(), 8u);
  EXPECT_EQ(d["levels"][0]["expected"], 1.0);
}

TEST(Cli, UnknownVertexIsInputError) {
  const auto r = run_cli("sssp --input " + fixture_path("fig6.g") + " --source Z");
  EXPECT_EQ(r.exit_code, 2);
}

TEST(Cli, MissingFileIsInputError) {
  EXPECT_EQ(run_cli("mst --input /nonexistent/graph.g").exit_code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli("").exit_code, 1);
  EXPECT_EQ(run_cli("frobnicate").exit_code, 1);
  EXPECT_EQ(run_cli("sssp --input " + fixture_path("fig6.g")).exit_code, 1);
  EXPECT_EQ(run_cli("sssp --input " + fixture_path("fig6.g") + " --source A -k 3").exit_code, 1);
  EXPECT_EQ(run_cli("bench --n 10 --queue fib").exit_code, 1);
}

}  // namespace
