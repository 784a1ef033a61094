#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <string>

namespace {

using json = nlohmann::json;

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(LOGSURF_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  while (const std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int rc = pclose(pipe);
  return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, out};
}

std::string data(const std::string& name) { return std::string(LOGSURF_DATA) + "/" + name; }

}  // namespace

TEST(Cli, ClassifyA1) {
  const auto r = run("classify --model " + data("a1.json") + " --delta '{\"D1\":\"1\",\"D2\":\"1\"}'");
  ASSERT_EQ(r.status, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["mrlc"]["value"], false);
  EXPECT_EQ(j["gmrlc"]["value"], true);
  EXPECT_EQ(j["gmrlc_witness"], json::array({"E"}));
  EXPECT_EQ(j["delta_Y"]["E"], "2");
}

TEST(Cli, MmpF1) {
  const auto r = run("mmp --fan " + data("f1.json"));
  ASSERT_EQ(r.status, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["birational_steps"], 1);
  EXPECT_EQ(j["outcome"]["type"], "mori_fiber_space");
  EXPECT_EQ(j["outcome"]["base_dimension"], 0);
  EXPECT_TRUE(j["violations"].empty());
}

TEST(Cli, ClassifySmoothEmptyBoundary) {
  const auto r = run("classify --model " + data("empty-boundary-smooth.json"));
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(json::parse(r.out)["klt"]["value"], true);
}

TEST(Cli, ValidationErrorsExitTwo) {
  const std::string path = std::string(LOGSURF_TMP) + "/bad_model.json";
  std::ofstream(path) << R"({"curves":[{"id":"E","self_int":-1,"genus":0,"k_dot":0}]})";
  const auto r = run("classify --model " + path);
  EXPECT_EQ(r.status, 2);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["violations"][0]["subject"], "E");
  EXPECT_EQ(j["violations"][0]["rule"], "adjunction");
  EXPECT_EQ(run("classify --model /nonexistent.json").status, 2);
  EXPECT_EQ(run("classify").status, 2);
  EXPECT_EQ(run("classify --model " + data("example33.json") + " --delta '{\"Q\":1}'").status, 2);
}

TEST(Cli, RefusalsExitThree) {
  EXPECT_EQ(run("mmp --model " + data("elliptic_cone.json") + " --delta '{\"F\":1}'").status, 3);
  EXPECT_EQ(run("classify --model " + data("example33.json") + " --delta '{\"L1\":\"3/2\"}'").status, 3);
}

TEST(Cli, PullbackAllowsOutOfRangeOnRequest) {
  const std::string model = data("example33.json");
  EXPECT_EQ(run("pullback --model " + model + " --delta '{\"L1\":2}'").status, 3);
  const auto r = run("pullback --model " + model + " --delta '{\"L1\":2}' --allow-out-of-range");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(json::parse(r.out)["delta_Y"]["E"], "1");
}

TEST(Cli, OtherCommands) {
  const auto minres = run("minres --model " + data("example33.json"));
  ASSERT_EQ(minres.status, 0);
  EXPECT_TRUE(json::parse(minres.out)["contracted"].empty());
  const auto fund = run("fundcycle --model " + data("elliptic_cone.json"));
  ASSERT_EQ(fund.status, 0);
  EXPECT_EQ(json::parse(fund.out)[0]["arithmetic_genus"], 1);
  const auto mult = run("multiplier --model " + data("example33.json") + " --delta '{\"L1\":1,\"L2\":1,\"L3\":1}'");
  ASSERT_EQ(mult.status, 0);
  EXPECT_EQ(json::parse(mult.out)["floor"]["E"], "2");
  const auto toric = run("toric-build --fan " + data("plane_fan.json"));
  ASSERT_EQ(toric.status, 0);
  EXPECT_EQ(json::parse(toric.out)["model"]["curves"].size(), 3u);
  const auto dot = run("dot --model " + data("example33.json"));
  ASSERT_EQ(dot.status, 0);
  EXPECT_NE(dot.out.find("graph"), std::string::npos);
}

TEST(Cli, TraceAndDotFiles) {
  const std::string trace = std::string(LOGSURF_TMP) + "/f1_trace.ndjson";
  const std::string dot = std::string(LOGSURF_TMP) + "/f1.dot";
  const auto r = run("mmp --fan " + data("f1.json") + " --trace " + trace + " --dot " + dot);
  ASSERT_EQ(r.status, 0);
  std::ifstream in(trace);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) {
    const auto j = json::parse(line);
    EXPECT_EQ(j["step"], lines + 1);
    EXPECT_EQ(j["ray"]["curve"], "T1");
    ++lines;
  }
  EXPECT_EQ(lines, 1);
  std::ifstream d(dot);
  const std::string text{std::istreambuf_iterator<char>(d), {}};
  EXPECT_NE(text.find("graph \"step0\""), std::string::npos);
  EXPECT_NE(text.find("graph \"step1\""), std::string::npos);
}

TEST(Cli, EmittedModelsReparse) {
  const auto toric = run("toric-build --fan " + data("f1.json"));
  ASSERT_EQ(toric.status, 0);
  const std::string path = std::string(LOGSURF_TMP) + "/f1_model.json";
  std::ofstream(path) << json::parse(toric.out)["model"].dump();
  const auto again = run("classify --model " + path);
  ASSERT_EQ(again.status, 0);
  EXPECT_EQ(json::parse(again.out)["klt"]["value"], true);
}

TEST(Cli, EnvironmentCapsWitnessSearch) {
  const auto r = run("classify --model " + data("a1.json") + " --delta '{\"D1\":1,\"D2\":1}'");
  const std::string cmd = "env MMP_SURFACE_MAX_SUBSET=0 " + std::string(LOGSURF_CLI) + " classify --model " + data("a1.json") +
                          " --delta '{\"D1\":1,\"D2\":1}'";
  FILE* pipe = popen(cmd.c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (const std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  pclose(pipe);
  EXPECT_EQ(json::parse(r.out)["gmrlc"]["value"], true);
  EXPECT_EQ(json::parse(out)["gmrlc"]["value"], "undecided");
}
