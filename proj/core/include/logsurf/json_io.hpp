#pragma once

#include <nlohmann/json.hpp>
#include <vector>

#include "logsurf/discrepancy.hpp"
#include "logsurf/mmp.hpp"
#include "logsurf/toric.hpp"

namespace logsurf {

using json = nlohmann::ordered_json;

/// Rationals are written as "p/q" strings (integers as "n"); integers and
/// strings are accepted on input. Throws ParseError.
json to_json(const Rational& r);
Rational rational_from_json(const json& j);

/// Divisor as an object {curve id: coefficient}.
json to_json(const Divisor& d);
Divisor divisor_from_json(const json& j);

json to_json(const Violation& v);
json to_json(const std::vector<Violation>& vs);

/// Model schema:
///   {"curves": [{"id", "self_int", "genus", "k_dot", "vertical"?, "toric_ray"?}],
///    "intersections": [{"a", "b", "n"}], "snc_attested"?, "points"?: [{"id", "curves"}],
///    "contracted"?: [ids], "q_factorial_points"?: [[ids]]}
json to_json(const SingularModel& m);
/// Structural problems throw ParseError; inconsistent data (unknown ids in
/// the intersection table, conflicting duplicate entries) is appended to
/// `problems` so the caller can report it together with validate().
SingularModel model_from_json(const json& j, std::vector<Violation>& problems);
SingularModel model_from_json(const json& j);

/// Either a list of integer pairs or {"rays": [...]}.
Fan2D fan_from_json(const json& j);
json to_json(const Fan2D& fan);

json to_json(const Verdict& v);
Verdict verdict_from_json(const json& j);

json to_json(const FundamentalCycle& z);
json to_json(const ClassificationReport& r);
ClassificationReport report_from_json(const json& j);

json to_json(const MultiplierFloor& m);
json to_json(const SemiampleWitness& w);
json to_json(const ToricSurface& t);

json to_json(const RayCandidate& r);
RayCandidate ray_from_json(const json& j);
json to_json(const MMPStep& s);
MMPStep step_from_json(const json& j);
json to_json(const MMPTrace& t);
MMPTrace trace_from_json(const json& j);

}  // namespace logsurf
