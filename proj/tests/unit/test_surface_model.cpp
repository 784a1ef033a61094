#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "logsurf/errors.hpp"
#include "logsurf/singular_model.hpp"

using namespace logsurf;
using fixtures::add;

namespace {

bool has_rule(const std::vector<Violation>& vs, const std::string& subject, const std::string& rule) {
  return std::any_of(vs.begin(), vs.end(), [&](const Violation& v) { return v.subject == subject && v.rule == rule; });
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace

TEST(Validate, MinusTwoCurveIsClean) {
  CurveConfig c;
  c.add_curve({"E", -2, 0, 0, true, std::nullopt});
  EXPECT_TRUE(validate(c).empty());
}

TEST(Validate, AdjunctionViolationNamesTheCurve) {
  CurveConfig c;
  c.add_curve({"E", -1, 0, 0, true, std::nullopt});
  const auto vs = validate(c);
  ASSERT_EQ(vs.size(), 1u);
  EXPECT_EQ(vs[0].subject, "E");
  EXPECT_EQ(vs[0].rule, "adjunction");
}

TEST(Validate, SharedPointMatchesIntersection) {
  CurveConfig c;
  c.add_curve({"C", 0, 0, -2, true, std::nullopt});
  c.add_curve({"D", 0, 0, -2, true, std::nullopt});
  c.set_intersection("C", "D", 1);
  c.snc_attested = true;
  c.points = {{"p", {"C", "D"}}};
  EXPECT_TRUE(validate(c).empty());
  EXPECT_TRUE(snc_verified(c));
}

TEST(Validate, SncTableMismatches) {
  CurveConfig c;
  c.add_curve({"C", 0, 0, -2, true, std::nullopt});
  c.add_curve({"D", 0, 0, -2, true, std::nullopt});
  c.add_curve({"F", 0, 0, -2, true, std::nullopt});
  c.set_intersection("C", "D", 2);
  c.snc_attested = true;
  c.points = {{"p", {"C", "D"}}, {"q", {"C", "D", "F"}}, {"r", {"C", "X"}}};
  const auto vs = validate(c);
  EXPECT_TRUE(has_rule(vs, "q", "snc.point_valence"));
  EXPECT_TRUE(has_rule(vs, "r", "snc.unknown_curve"));
  EXPECT_FALSE(snc_verified(c));
}

TEST(Validate, NegativeIntersectionAndGenus) {
  CurveConfig c;
  c.add_curve({"C", 0, -1, -4, true, std::nullopt});
  c.add_curve({"D", 0, 0, -2, true, std::nullopt});
  c.set_intersection("C", "D", -1);
  const auto vs = validate(c);
  EXPECT_TRUE(has_rule(vs, "C", "genus.nonnegative"));
  EXPECT_TRUE(has_rule(vs, "C|D", "intersections.nonnegative"));
}

TEST(Validate, ModelRejectsPositiveContractedComponent) {
  SingularModel m;
  add(m, "C", 0);
  m.contracted = {"C"};
  EXPECT_FALSE(validate(m).empty());
  EXPECT_EQ(code_of([&] { require_contractible(m); }), ErrorCode::NotContractible);
}

TEST(CurveConfig, DuplicateAndUnknownIds) {
  CurveConfig c;
  c.add_curve({"C", 0, 0, -2, true, std::nullopt});
  EXPECT_EQ(code_of([&] { c.add_curve({"C", 0, 0, -2, true, std::nullopt}); }), ErrorCode::InvalidCurveData);
  EXPECT_EQ(code_of([&] { c.index("nope"); }), ErrorCode::UnknownCurve);
}

TEST(MumfordPullback, A1) {
  const auto p = fixtures::a1_point();
  EXPECT_EQ(mumford_pullback(p.model, Divisor{{"L", 1}}), (Divisor{{"L", 1}, {"E", Rational(1, 2)}}));
}

TEST(MumfordPullback, ZeroDivisor) {
  EXPECT_TRUE(mumford_pullback(fixtures::a2_point().model, Divisor{}).is_zero());
}

TEST(MumfordPullback, A2Chain) {
  const auto p = fixtures::a2_point();
  EXPECT_EQ(mumford_pullback(p.model, Divisor{{"L", 1}}),
            (Divisor{{"L", 1}, {"E1", Rational(2, 3)}, {"E2", Rational(1, 3)}}));
}

TEST(MumfordPullback, ContractedSupportRejected) {
  const auto p = fixtures::a1_point();
  EXPECT_EQ(code_of([&] { mumford_pullback(p.model, Divisor{{"E", 1}}); }), ErrorCode::ContractedSupport);
}

TEST(Pushforward, DropsContracted) {
  const auto m = fixtures::a1_point().model;
  EXPECT_EQ(pushforward(m, Divisor{{"L", 1}, {"E", Rational(1, 2)}}), (Divisor{{"L", 1}}));
  EXPECT_TRUE(pushforward(m, Divisor{{"E", 2}}).is_zero());
  const auto lines = fixtures::concurrent_lines().model;
  EXPECT_EQ(pushforward(lines, Divisor{{"L1", 1}, {"L2", 1}}), (Divisor{{"L1", 1}, {"L2", 1}}));
}

TEST(IntersectOnX, A1SelfIntersection) {
  const auto m = fixtures::a1_point().model;
  EXPECT_EQ(intersect_on_X(m, Divisor{{"L", 1}}, Divisor{{"L", 1}}), Rational(-1, 2));
  EXPECT_EQ(intersect_on_X(m, Divisor{}, Divisor{{"L", 1}}), Rational(0));
  SingularModel smooth = m;
  smooth.contracted.clear();
  EXPECT_EQ(intersect_on_X(smooth, Divisor{{"L", 1}}, Divisor{{"E", 1}}), Rational(1));
}

TEST(BlowDown, LineInThePlane) {
  CurveConfig c;
  c.add_curve({"E", -1, 0, -1, true, std::nullopt});
  c.add_curve({"L", 0, 0, -2, true, std::nullopt});
  c.set_intersection("E", "L", 1);
  const auto d = blow_down(c, "E");
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d.curve("L").self_int, 1);
  EXPECT_EQ(d.curve("L").k_dot, -3);
  EXPECT_TRUE(validate(d).empty());
}

TEST(BlowDown, TwoCurvesThroughThePointMeet) {
  CurveConfig c;
  c.add_curve({"E", -1, 0, -1, true, std::nullopt});
  c.add_curve({"C", -1, 0, -1, true, std::nullopt});
  c.add_curve({"D", -2, 0, 0, true, std::nullopt});
  c.add_curve({"F", 0, 0, -2, true, std::nullopt});
  c.set_intersection("E", "C", 1);
  c.set_intersection("E", "D", 1);
  const auto d = blow_down(c, "E");
  EXPECT_EQ(d.meet("C", "D"), 1);
  EXPECT_EQ(d.curve("F"), c.curve("F"));
  EXPECT_EQ(d.meet("C", "F"), 0);
}

TEST(BlowDown, TangencyRaisesGenusToKeepAdjunction) {
  CurveConfig c;
  c.add_curve({"E", -1, 0, -1, true, std::nullopt});
  c.add_curve({"C", -3, 0, 1, true, std::nullopt});
  c.set_intersection("E", "C", 2);
  const auto d = blow_down(c, "E");
  EXPECT_EQ(d.curve("C").self_int, 1);
  EXPECT_EQ(d.curve("C").k_dot, -1);
  EXPECT_EQ(d.curve("C").genus, 1);
  EXPECT_TRUE(validate(d).empty());
}

TEST(BlowDown, RejectsNonMinusOneCurve) {
  CurveConfig c;
  c.add_curve({"E", -2, 0, 0, true, std::nullopt});
  EXPECT_EQ(code_of([&] { blow_down(c, "E"); }), ErrorCode::NotMinusOneCurve);
}

TEST(SurfaceModelProperties, ProjectionFormulaAndPushPull) {
  std::mt19937 rng(5);
  for (int t = 0; t < 100; ++t) {
    const auto p = fixtures::random_minimal_resolution(rng);
    Divisor d;
    for (const auto& [id, c] : p.delta) d.set(id, c - Rational(1, 3));
    const Divisor pb = mumford_pullback(p.model, d);
    for (const auto& e : p.model.contracted) {
      EXPECT_EQ(p.model.config.intersect(pb, p.model.config.index(e)), Rational(0));
      const Divisor z{{e, Rational(std::uniform_int_distribution<long>(1, 3)(rng))}};
      EXPECT_EQ(p.model.config.intersect(pb, z), Rational(0));
    }
    EXPECT_EQ(pushforward(p.model, pb), d);
  }
}

TEST(SurfaceModelProperties, BlowDownPreservesAdjunctionAndCount) {
  std::mt19937 rng(9);
  for (int t = 0; t < 100; ++t) {
    SingularModel m;
    add(m, "E", -1);
    const int n = std::uniform_int_distribution<int>(1, 4)(rng);
    for (int i = 0; i < n; ++i) {
      const std::string id = "C" + std::to_string(i);
      add(m, id, std::uniform_int_distribution<long>(-4, 2)(rng), std::uniform_int_distribution<long>(0, 1)(rng));
      m.config.set_intersection("E", id, std::uniform_int_distribution<long>(0, 3)(rng));
    }
    const auto d = blow_down(m.config, "E");
    EXPECT_EQ(d.size(), m.config.size() - 1);
    EXPECT_TRUE(validate(d).empty());
  }
}

TEST(SurfaceModelProperties, CompositionConsistency) {
  // Y -> X' (contract S) -> X (contract S + T): pulling back to X' and then to
  // Y agrees with pulling back to Y directly.
  std::mt19937 rng(13);
  int checked = 0;
  for (int t = 0; t < 100; ++t) {
    const auto p = fixtures::random_minimal_resolution(rng);
    if (p.model.contracted.size() < 2) continue;
    SingularModel partial = p.model;
    partial.contracted.erase(partial.contracted.begin());
    const Divisor full = mumford_pullback(p.model, p.delta);
    const Divisor on_partial = pushforward(partial, full);
    EXPECT_EQ(mumford_pullback(partial, on_partial), full);
    ++checked;
  }
  EXPECT_GT(checked, 20);
}
