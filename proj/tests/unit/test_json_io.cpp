#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "logsurf/dot.hpp"
#include "logsurf/errors.hpp"
#include "logsurf/json_io.hpp"

using namespace logsurf;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST(JsonIo, Rationals) {
  EXPECT_EQ(to_json(Rational(-3, 6)), "-1/2");
  EXPECT_EQ(rational_from_json(json(4)), Rational(4));
  EXPECT_EQ(rational_from_json(json("2/6")), Rational(1, 3));
  EXPECT_EQ(code_of([] { rational_from_json(json(0.5)); }), ErrorCode::ParseError);
}

TEST(JsonIo, DivisorRoundTrip) {
  const Divisor d{{"A", Rational(1, 2)}, {"B", -3}};
  EXPECT_EQ(divisor_from_json(to_json(d)), d);
  EXPECT_EQ(divisor_from_json(json::parse(R"({"A":"1/2","B":-3,"C":0})")), d);
}

TEST(JsonIo, ModelRoundTrip) {
  for (const auto& p : fixtures::all_pairs()) {
    EXPECT_EQ(model_from_json(to_json(p.model)), p.model) << p.name;
    EXPECT_EQ(to_json(model_from_json(json::parse(to_json(p.model).dump()))), to_json(p.model));
  }
}

TEST(JsonIo, ModelProblemsAreReported) {
  const auto j = json::parse(R"({
    "curves": [{"id": "C", "self_int": 0, "genus": 0, "k_dot": -2},
               {"id": "D", "self_int": 0, "genus": 0, "k_dot": -2}],
    "intersections": [{"a": "C", "b": "D", "n": 1}, {"a": "D", "b": "C", "n": 2},
                      {"a": "C", "b": "Z", "n": 1}, {"a": "C", "b": "C", "n": 3}]
  })");
  std::vector<Violation> problems;
  model_from_json(j, problems);
  ASSERT_EQ(problems.size(), 3u);
  EXPECT_EQ(problems[0].rule, "intersections.conflict");
  EXPECT_EQ(problems[1].rule, "intersections.unknown_curve");
  EXPECT_EQ(problems[2].rule, "intersections.self_conflict");
  EXPECT_EQ(code_of([&] { model_from_json(j); }), ErrorCode::ParseError);
}

TEST(JsonIo, StructuralErrors) {
  EXPECT_EQ(code_of([] { model_from_json(json::parse(R"({"curves": [{"id": "C"}]})")); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { model_from_json(json::parse("[]")); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { model_from_json(json::parse(R"({"curves": [{"id": "C", "self_int": 0.5, "genus": 0, "k_dot": -2}]})")); }),
            ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { fan_from_json(json::parse("[[1,0],[0]]")); }), ErrorCode::ParseError);
}

TEST(JsonIo, FanForms) {
  const auto a = fan_from_json(json::parse("[[1,0],[0,1],[-1,-1]]"));
  const auto b = fan_from_json(json::parse(R"({"rays": [[1,0],[0,1],[-1,-1]]})"));
  EXPECT_EQ(a, b);
  EXPECT_EQ(fan_from_json(to_json(a)), a);
}

TEST(JsonIo, ReportRoundTrip) {
  for (const auto& p : fixtures::all_pairs()) {
    const json j = to_json(classify(p.model, p.delta));
    EXPECT_EQ(to_json(report_from_json(j)), j) << p.name;
  }
  const auto r = to_json(classify(fixtures::elliptic_cone().model, {}));
  EXPECT_EQ(r.at("q_factorial").at("value"), "undecided");
  EXPECT_EQ(r.at("lc").at("value"), true);
}

TEST(JsonIo, TraceRoundTrip) {
  const auto ts = config_from_fan(Fan2D::from_rays({{1, 0}, {0, 1}, {-1, 1}, {0, -1}}));
  const json j = to_json(run_mmp(ts.model, {}, ts.universe, false));
  EXPECT_EQ(to_json(trace_from_json(j)), j);
  const auto plane = config_from_fan(Fan2D::from_rays({{1, 0}, {0, 1}, {-1, -1}}));
  const json g = to_json(run_mmp(plane.model, plane.boundary, plane.universe, false));
  EXPECT_EQ(g.at("outcome").at("type"), "good_minimal_model");
  EXPECT_EQ(to_json(trace_from_json(g)), g);
}

TEST(Dot, OneNodePerCurveOneEdgePerUnit) {
  const auto m = fixtures::toric_a1_with_sections().model;
  const std::string dot = dual_graph_dot(m);
  EXPECT_EQ(count(dot, "[label="), m.config.size());
  long units = 0;
  for (std::size_t i = 0; i < m.config.size(); ++i) {
    for (std::size_t j = i + 1; j < m.config.size(); ++j) units += m.config.meet(i, j);
  }
  EXPECT_EQ(count(dot, " -- "), static_cast<std::size_t>(units));
  EXPECT_EQ(count(dot, "style=filled"), 1u);
  EXPECT_NE(dot.find("\"E\\n(-2, g=0)\""), std::string::npos);
}
