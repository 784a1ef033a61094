#include "logsurf/json_io.hpp"

#include <map>

#include "logsurf/errors.hpp"

namespace logsurf {

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string(what) + ": " + e.what());
  }
}

long get_long(const json& j, const char* key) {
  const json& v = j.at(key);
  if (!v.is_number_integer()) throw Error(ErrorCode::ParseError, std::string("field '") + key + "' must be an integer");
  return v.get<long>();
}

std::vector<std::string> id_list(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "expected a list of curve ids");
  return j.get<std::vector<std::string>>();
}

json id_set(const std::set<std::string>& s) { return json(std::vector<std::string>(s.begin(), s.end())); }

std::set<std::string> id_set_from(const json& j) {
  const auto v = id_list(j);
  return {v.begin(), v.end()};
}

}  // namespace

json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw Error(ErrorCode::ParseError, "rational must be an integer or a \"p/q\" string, got " + j.dump());
}

json to_json(const Divisor& d) {
  json out = json::object();
  for (const auto& [id, c] : d) out[id] = to_json(c);
  return out;
}

Divisor divisor_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "divisor must be an object {curve id: coefficient}");
  Divisor d;
  for (const auto& [id, c] : j.items()) d.add(id, rational_from_json(c));
  return d;
}

json to_json(const Violation& v) { return {{"subject", v.subject}, {"rule", v.rule}, {"detail", v.detail}}; }

json to_json(const std::vector<Violation>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

json to_json(const SingularModel& m) {
  const auto& cfg = m.config;
  json curves = json::array();
  for (const auto& c : cfg.curves()) {
    json e = {{"id", c.id}, {"self_int", c.self_int}, {"genus", c.genus}, {"k_dot", c.k_dot}, {"vertical", c.vertical}};
    if (c.toric_ray) e["toric_ray"] = {(*c.toric_ray)[0], (*c.toric_ray)[1]};
    curves.push_back(std::move(e));
  }
  json inter = json::array();
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    for (std::size_t j = i + 1; j < cfg.size(); ++j) {
      if (cfg.meet(i, j) != 0) inter.push_back({{"a", cfg.curve(i).id}, {"b", cfg.curve(j).id}, {"n", cfg.meet(i, j)}});
    }
  }
  json out = {{"curves", curves}, {"intersections", inter}, {"snc_attested", cfg.snc_attested}};
  if (!cfg.points.empty()) {
    json pts = json::array();
    for (const auto& p : cfg.points) pts.push_back({{"id", p.id}, {"curves", p.curves}});
    out["points"] = std::move(pts);
  }
  out["contracted"] = id_set(m.contracted);
  if (!m.q_factorial_points.empty()) {
    json q = json::array();
    for (const auto& s : m.q_factorial_points) q.push_back(id_set(s));
    out["q_factorial_points"] = std::move(q);
  }
  return out;
}

SingularModel model_from_json(const json& j, std::vector<Violation>& problems) {
  return guarded("model", [&] {
    if (!j.is_object()) throw Error(ErrorCode::ParseError, "model must be a JSON object");
    SingularModel m;
    auto& cfg = m.config;
    for (const auto& c : j.at("curves")) {
      CurveRecord r;
      r.id = c.at("id").get<std::string>();
      r.self_int = get_long(c, "self_int");
      r.genus = get_long(c, "genus");
      r.k_dot = get_long(c, "k_dot");
      if (c.contains("vertical")) r.vertical = c.at("vertical").get<bool>();
      if (c.contains("toric_ray") && !c.at("toric_ray").is_null()) {
        const auto v = c.at("toric_ray").get<std::vector<long>>();
        if (v.size() != 2) throw Error(ErrorCode::ParseError, "toric_ray of '" + r.id + "' must have two entries");
        r.toric_ray = std::array<long, 2>{v[0], v[1]};
      }
      if (cfg.contains(r.id)) {
        problems.push_back({r.id, "curves.duplicate_id", "curve id listed twice"});
        continue;
      }
      cfg.add_curve(std::move(r));
    }
    std::map<std::pair<std::string, std::string>, long> seen;
    if (j.contains("intersections")) {
      for (const auto& e : j.at("intersections")) {
        const auto a = e.at("a").get<std::string>();
        const auto b = e.at("b").get<std::string>();
        const long n = get_long(e, "n");
        const std::string subject = a + "|" + b;
        if (!cfg.contains(a) || !cfg.contains(b)) {
          problems.push_back({subject, "intersections.unknown_curve", "entry references an unknown curve"});
          continue;
        }
        if (a == b) {
          if (cfg.curve(a).self_int != n) {
            problems.push_back({subject, "intersections.self_conflict",
                                "entry " + std::to_string(n) + " disagrees with self_int " +
                                    std::to_string(cfg.curve(a).self_int)});
          }
          continue;
        }
        const auto key = a < b ? std::pair{a, b} : std::pair{b, a};
        const auto [it, fresh] = seen.emplace(key, n);
        if (!fresh && it->second != n) {
          problems.push_back({subject, "intersections.conflict",
                              "listed as both " + std::to_string(it->second) + " and " + std::to_string(n)});
          continue;
        }
        cfg.set_intersection(a, b, n);
      }
    }
    if (j.contains("snc_attested")) cfg.snc_attested = j.at("snc_attested").get<bool>();
    if (j.contains("points")) {
      for (const auto& p : j.at("points")) cfg.points.push_back({p.at("id").get<std::string>(), id_list(p.at("curves"))});
    }
    if (j.contains("contracted")) m.contracted = id_set_from(j.at("contracted"));
    if (j.contains("q_factorial_points")) {
      for (const auto& s : j.at("q_factorial_points")) m.q_factorial_points.push_back(id_set_from(s));
    }
    return m;
  });
}

SingularModel model_from_json(const json& j) {
  std::vector<Violation> problems;
  SingularModel m = model_from_json(j, problems);
  if (!problems.empty()) {
    throw Error(ErrorCode::ParseError, problems.front().subject + ": " + problems.front().detail);
  }
  return m;
}

Fan2D fan_from_json(const json& j) {
  return guarded("fan", [&] {
    const json& rays = j.is_object() ? j.at("rays") : j;
    if (!rays.is_array()) throw Error(ErrorCode::ParseError, "fan must be a list of integer pairs");
    std::vector<Ray> out;
    for (const auto& r : rays) {
      const auto v = r.get<std::vector<long>>();
      if (v.size() != 2) throw Error(ErrorCode::ParseError, "fan rays must be integer pairs");
      out.push_back({v[0], v[1]});
    }
    return Fan2D::from_rays(std::move(out));
  });
}

json to_json(const Fan2D& fan) {
  json out = json::array();
  for (const auto& r : fan.rays()) out.push_back({r[0], r[1]});
  return out;
}

json to_json(const Verdict& v) {
  json value;
  switch (v.state) {
    case Verdict::State::yes: value = true; break;
    case Verdict::State::no: value = false; break;
    case Verdict::State::undecided: value = "undecided"; break;
  }
  return {{"value", value}, {"reason", v.reason}};
}

Verdict verdict_from_json(const json& j) {
  return guarded("verdict", [&] {
    const json& v = j.at("value");
    Verdict out;
    out.reason = j.value("reason", "");
    if (v.is_boolean()) {
      out.state = v.get<bool>() ? Verdict::State::yes : Verdict::State::no;
    } else if (v == "undecided") {
      out.state = Verdict::State::undecided;
    } else {
      throw Error(ErrorCode::ParseError, "verdict value must be true, false or \"undecided\"");
    }
    return out;
  });
}

json to_json(const FundamentalCycle& z) {
  return {{"cycle", to_json(z.cycle)}, {"arithmetic_genus", z.arithmetic_genus}, {"rational", z.rational()}};
}

namespace {

FundamentalCycle cycle_from_json(const json& j) {
  return {divisor_from_json(j.at("cycle")), get_long(j, "arithmetic_genus")};
}

json to_json(const PointCertificate& p) {
  return {{"curves", id_set(p.curves)},
          {"fundamental_cycle", to_json(p.cycle)},
          {"asserted_q_factorial", p.asserted_q_factorial},
          {"certified", p.certified()}};
}

PointCertificate point_from_json(const json& j) {
  return {id_set_from(j.at("curves")), cycle_from_json(j.at("fundamental_cycle")),
          j.at("asserted_q_factorial").get<bool>()};
}

}  // namespace

json to_json(const ClassificationReport& r) {
  json pts = json::array();
  for (const auto& p : r.points) pts.push_back(to_json(p));
  return {{"klt", to_json(r.klt)},
          {"lc", to_json(r.lc)},
          {"mrlc", to_json(r.mrlc)},
          {"gmrlc", to_json(r.gmrlc)},
          {"gmrlc_witness", r.gmrlc_witness ? id_set(*r.gmrlc_witness) : json(nullptr)},
          {"q_factorial", to_json(r.q_factorial)},
          {"points", pts},
          {"delta_Y", to_json(r.delta_Y)},
          {"delta_minres", to_json(r.delta_minres)},
          {"minres_contracted", id_set(r.minres_contracted)},
          {"notes", r.notes}};
}

ClassificationReport report_from_json(const json& j) {
  return guarded("classification report", [&] {
    ClassificationReport r;
    r.klt = verdict_from_json(j.at("klt"));
    r.lc = verdict_from_json(j.at("lc"));
    r.mrlc = verdict_from_json(j.at("mrlc"));
    r.gmrlc = verdict_from_json(j.at("gmrlc"));
    if (!j.at("gmrlc_witness").is_null()) r.gmrlc_witness = id_set_from(j.at("gmrlc_witness"));
    r.q_factorial = verdict_from_json(j.at("q_factorial"));
    for (const auto& p : j.at("points")) r.points.push_back(point_from_json(p));
    r.delta_Y = divisor_from_json(j.at("delta_Y"));
    r.delta_minres = divisor_from_json(j.at("delta_minres"));
    r.minres_contracted = id_set_from(j.at("minres_contracted"));
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
  });
}

json to_json(const MultiplierFloor& m) {
  return {{"floor", to_json(m.floor)}, {"multiplier_ideal_trivial", m.klt_equiv}};
}

json to_json(const SemiampleWitness& w) {
  json verts = json::array();
  for (const auto& v : w.vertices) verts.push_back({to_json(v[0]), to_json(v[1])});
  json lattice = json::array();
  for (const auto& v : w.lattice_vertices) lattice.push_back({v[0], v[1]});
  return {{"vertices", verts}, {"lattice_vertices", lattice}, {"scale", w.scale}, {"image_dimension", w.image_dimension}};
}

namespace {

SemiampleWitness witness_from_json(const json& j) {
  SemiampleWitness w;
  for (const auto& v : j.at("vertices")) w.vertices.push_back({rational_from_json(v.at(0)), rational_from_json(v.at(1))});
  for (const auto& v : j.at("lattice_vertices")) w.lattice_vertices.push_back({v.at(0).get<long>(), v.at(1).get<long>()});
  w.scale = get_long(j, "scale");
  w.image_dimension = static_cast<int>(get_long(j, "image_dimension"));
  return w;
}

}  // namespace

json to_json(const ToricSurface& t) {
  return {{"model", to_json(t.model)},
          {"fan", to_json(t.fan)},
          {"smooth_fan", to_json(t.smooth_fan)},
          {"universe", t.universe},
          {"universe_complete", true},
          {"canonical_X", to_json(t.canonical_X)},
          {"canonical_Y", to_json(t.canonical_Y)},
          {"boundary", to_json(t.boundary)}};
}

json to_json(const RayCandidate& r) {
  return {{"curve", r.curve},
          {"kdelta_deg", to_json(r.kdelta_deg)},
          {"self_int_X", to_json(r.self_int_X)},
          {"kind", std::string(to_string(r.kind))},
          {"curves_on_ray", r.curves_on_ray}};
}

RayCandidate ray_from_json(const json& j) {
  return guarded("ray", [&] {
    RayCandidate r;
    r.curve = j.at("curve").get<std::string>();
    r.kdelta_deg = rational_from_json(j.at("kdelta_deg"));
    r.self_int_X = rational_from_json(j.at("self_int_X"));
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "birational") {
      r.kind = RayKind::birational;
    } else if (kind == "fiber-type") {
      r.kind = RayKind::fiber_type;
    } else if (kind == "ample-anti") {
      r.kind = RayKind::ample_anti;
    } else {
      throw Error(ErrorCode::ParseError, "unknown ray kind '" + kind + "'");
    }
    r.curves_on_ray = j.at("curves_on_ray").get<std::vector<std::string>>();
    return r;
  });
}

json to_json(const MMPStep& s) {
  return {{"ray", to_json(s.ray)},
          {"bound_ok", s.bound_ok},
          {"rank_after", s.rank_after},
          {"delta", to_json(s.delta)},
          {"classification", to_json(s.classification)},
          {"before", to_json(s.before)},
          {"after", to_json(s.after)}};
}

MMPStep step_from_json(const json& j) {
  return guarded("mmp step", [&] {
    MMPStep s;
    s.ray = ray_from_json(j.at("ray"));
    s.bound_ok = j.at("bound_ok").get<bool>();
    s.rank_after = j.at("rank_after").get<std::size_t>();
    s.delta = divisor_from_json(j.at("delta"));
    s.classification = report_from_json(j.at("classification"));
    s.before = model_from_json(j.at("before"));
    s.after = model_from_json(j.at("after"));
    return s;
  });
}

json to_json(const MMPTrace& t) {
  json stages = json::array();
  for (const auto& stage : t.stages) {
    json rays = json::array();
    for (const auto& c : stage) rays.push_back({{"ray", to_json(c.ray)}, {"bound_ok", c.bound_ok}});
    stages.push_back(std::move(rays));
  }
  json steps = json::array();
  for (const auto& s : t.steps) steps.push_back(to_json(s));
  json outcome;
  if (const auto* gm = std::get_if<GoodMinimalModel>(&t.outcome)) {
    json cert = json::array();
    for (const auto& [id, deg] : gm->nef_certificate) cert.push_back({{"curve", id}, {"degree", to_json(deg)}});
    outcome = {{"type", "good_minimal_model"},
               {"nef_certificate", cert},
               {"semiample", gm->semiample ? to_json(*gm->semiample) : json(nullptr)},
               {"abundance", gm->abundance}};
  } else {
    const auto& mfs = std::get<MoriFiberSpace>(t.outcome);
    outcome = {{"type", "mori_fiber_space"},
               {"ray", to_json(mfs.ray)},
               {"base_dimension", mfs.base_dimension},
               {"relative_picard_rank", mfs.relative_picard_rank},
               {"picard_rank", mfs.picard_rank},
               {"certificate", mfs.certificate}};
  }
  return {{"universe", t.universe},
          {"vertical_only", t.vertical_only},
          {"universe_complete", t.universe_complete},
          {"qualifier", t.universe_complete ? json(nullptr) : json("relative to universe")},
          {"initial_rank", t.initial_rank},
          {"birational_steps", t.birational_steps()},
          {"outcome", outcome},
          {"violations", t.violations},
          {"stages", stages},
          {"steps", steps},
          {"initial", to_json(t.initial)},
          {"initial_delta", to_json(t.initial_delta)},
          {"initial_classification", to_json(t.initial_classification)},
          {"final_model", to_json(t.final_model)},
          {"final_delta", to_json(t.final_delta)}};
}

MMPTrace trace_from_json(const json& j) {
  return guarded("mmp trace", [&] {
    MMPTrace t;
    t.universe = j.at("universe").get<std::vector<std::string>>();
    t.vertical_only = j.at("vertical_only").get<bool>();
    t.universe_complete = j.at("universe_complete").get<bool>();
    t.initial_rank = j.at("initial_rank").get<std::size_t>();
    const json& o = j.at("outcome");
    const auto type = o.at("type").get<std::string>();
    if (type == "good_minimal_model") {
      GoodMinimalModel gm;
      for (const auto& c : o.at("nef_certificate")) {
        gm.nef_certificate.emplace_back(c.at("curve").get<std::string>(), rational_from_json(c.at("degree")));
      }
      if (!o.at("semiample").is_null()) gm.semiample = witness_from_json(o.at("semiample"));
      gm.abundance = o.at("abundance").get<std::string>();
      t.outcome = std::move(gm);
    } else if (type == "mori_fiber_space") {
      MoriFiberSpace mfs;
      mfs.ray = ray_from_json(o.at("ray"));
      mfs.base_dimension = static_cast<int>(get_long(o, "base_dimension"));
      mfs.relative_picard_rank = o.at("relative_picard_rank").get<std::size_t>();
      mfs.picard_rank = o.at("picard_rank").get<std::size_t>();
      mfs.certificate = o.at("certificate").get<std::string>();
      t.outcome = std::move(mfs);
    } else {
      throw Error(ErrorCode::ParseError, "unknown outcome type '" + type + "'");
    }
    t.violations = j.at("violations").get<std::vector<std::string>>();
    for (const auto& stage : j.at("stages")) {
      auto& out = t.stages.emplace_back();
      for (const auto& c : stage) out.push_back({ray_from_json(c.at("ray")), c.at("bound_ok").get<bool>()});
    }
    for (const auto& s : j.at("steps")) t.steps.push_back(step_from_json(s));
    t.initial = model_from_json(j.at("initial"));
    t.initial_delta = divisor_from_json(j.at("initial_delta"));
    t.initial_classification = report_from_json(j.at("initial_classification"));
    t.final_model = model_from_json(j.at("final_model"));
    t.final_delta = divisor_from_json(j.at("final_delta"));
    return t;
  });
}

}  // namespace logsurf
