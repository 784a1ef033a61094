#include "logsurf/discrepancy.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "logsurf/errors.hpp"
#include "logsurf/linalg.hpp"

namespace logsurf {

std::string_view to_string(Verdict::State s) {
  switch (s) {
    case Verdict::State::yes: return "true";
    case Verdict::State::no: return "false";
    case Verdict::State::undecided: return "undecided";
  }
  return "undecided";
}

std::vector<Violation> boundary_violations(const SingularModel& model, const Divisor& delta) {
  std::vector<Violation> out;
  for (const auto& [id, c] : delta) {
    if (!model.config.contains(id)) {
      out.push_back({id, "boundary.unknown_curve", "boundary component is not a configured curve"});
    } else if (model.is_contracted(id)) {
      out.push_back({id, "boundary.contracted", "boundary component is contracted; Delta lives on X"});
    } else if (c.sign() < 0 || c > Rational(1)) {
      out.push_back({id, "boundary.range", "coefficient " + c.str() + " outside [0,1]"});
    }
  }
  return out;
}

namespace {

void require_boundary(const SingularModel& model, const Divisor& delta) {
  const auto v = boundary_violations(model, delta);
  if (v.empty()) return;
  const auto& first = v.front();
  ErrorCode code = ErrorCode::BoundaryOutOfRange;
  if (first.rule == "boundary.unknown_curve") code = ErrorCode::UnknownCurve;
  if (first.rule == "boundary.contracted") code = ErrorCode::ContractedSupport;
  throw Error(code, first.subject + ": " + first.detail);
}

bool all_at_most_one(const Divisor& d) {
  return std::all_of(d.begin(), d.end(), [](const auto& t) { return t.second <= Rational(1); });
}

bool all_below_one(const Divisor& d) {
  return std::all_of(d.begin(), d.end(), [](const auto& t) { return t.second < Rational(1); });
}

std::string join(const std::set<std::string>& ids) {
  std::string s;
  for (const auto& id : ids) s += (s.empty() ? "" : ",") + id;
  return "{" + s + "}";
}

}  // namespace

Divisor log_pullback_unchecked(const SingularModel& model, const Divisor& delta) {
  return delta + exceptional_completion(model.config, model.contracted, delta, true);
}

Divisor log_pullback(const SingularModel& model, const Divisor& delta) {
  require_boundary(model, delta);
  return log_pullback_unchecked(model, delta);
}

RoundedDivisor round_ops(const Divisor& d) {
  RoundedDivisor r;
  for (const auto& [id, c] : d) {
    const Rational fl = c.floor();
    r.floor.set(id, fl);
    r.ceil.set(id, c.ceil());
    r.frac.set(id, c - fl);
  }
  return r;
}

SingularModel minimal_resolution(const SingularModel& model) {
  return minimal_resolution(model, [](std::span<const std::string> c) { return c.front(); });
}

SingularModel minimal_resolution(const SingularModel& model, const BlowDownChooser& choose) {
  SingularModel cur = model;
  for (;;) {
    std::vector<std::string> candidates;
    for (const auto& id : cur.contracted) {
      const auto& c = cur.config.curve(id);
      if (c.self_int == -1 && c.genus == 0) candidates.push_back(id);
    }
    if (candidates.empty()) break;
    const std::string pick = choose(candidates);
    if (std::find(candidates.begin(), candidates.end(), pick) == candidates.end()) {
      throw Error(ErrorCode::Internal, "blow-down chooser returned a non-candidate '" + pick + "'");
    }
    cur.config = blow_down(cur.config, pick);
    cur.contracted.erase(pick);
    for (auto& pt : cur.q_factorial_points) pt.erase(pick);
    std::erase_if(cur.q_factorial_points, [](const auto& pt) { return pt.empty(); });
  }
  return cur;
}

FundamentalCycle fundamental_cycle(const SingularModel& model, const Component& component) {
  if (component.empty()) throw Error(ErrorCode::NotConnected, "empty component");
  std::vector<std::size_t> idx;
  for (const auto& id : component) {
    idx.push_back(model.config.index(id));
    if (!model.is_contracted(id)) throw Error(ErrorCode::ContractedSupport, "'" + id + "' is not contracted");
  }
  if (connected_components(model.config, component).size() != 1) {
    throw Error(ErrorCode::NotConnected, join(component) + " is not connected");
  }
  const QMatrix m = model.config.intersection_matrix(idx);
  if (!is_negative_definite(m)) throw Error(ErrorCode::NotNegativeDefinite, join(component) + " is not negative definite");

  const std::size_t n = idx.size();
  std::vector<long> z(n, 1);
  auto dot_e = [&](std::size_t i) {
    long s = 0;
    for (std::size_t j = 0; j < n; ++j) s += z[j] * model.config.meet(idx[j], idx[i]);
    return s;
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (dot_e(i) > 0) {
        ++z[i];
        changed = true;
        break;
      }
    }
  }
  long z2 = 0;
  long kz = 0;
  for (std::size_t i = 0; i < n; ++i) {
    z2 += z[i] * dot_e(i);
    kz += z[i] * model.config.curve(idx[i]).k_dot;
  }
  FundamentalCycle fc;
  std::size_t k = 0;
  for (const auto& id : component) fc.cycle.set(id, Rational(z[k++]));
  fc.arithmetic_genus = 1 + (z2 + kz) / 2;
  return fc;
}

ClassifyOptions classify_options_from_env() {
  ClassifyOptions o;
  if (const char* env = std::getenv("MMP_SURFACE_MAX_SUBSET")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0) o.max_subset = static_cast<std::size_t>(v);
  }
  return o;
}

namespace {

bool asserted(const SingularModel& model, const Component& comp) {
  return std::find(model.q_factorial_points.begin(), model.q_factorial_points.end(), comp) !=
         model.q_factorial_points.end();
}

// Search over T = forced + S, S ranging over subsets of `rest` by increasing
// size and then lexicographically, for a contraction whose points are all
// certified Q-factorial.
std::optional<std::set<std::string>> find_gmrlc_witness(const SingularModel& model, const std::set<std::string>& forced,
                                                        const std::vector<std::string>& rest) {
  std::map<Component, bool> certified;
  auto usable = [&](const std::set<std::string>& t) {
    for (const auto& comp : connected_components(model.config, t)) {
      auto it = certified.find(comp);
      if (it == certified.end()) {
        const bool ok = asserted(model, comp) || fundamental_cycle(model, comp).rational();
        it = certified.emplace(comp, ok).first;
      }
      if (!it->second) return false;
    }
    return true;
  };
  const std::size_t r = rest.size();
  for (std::size_t k = 0; k <= r; ++k) {
    std::vector<bool> pick(r, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      std::set<std::string> t = forced;
      for (std::size_t i = 0; i < r; ++i) {
        if (pick[i]) t.insert(rest[i]);
      }
      if (usable(t)) return t;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return std::nullopt;
}

}  // namespace

ClassificationReport classify(const SingularModel& model, const Divisor& delta, const ClassifyOptions& options) {
  require_boundary(model, delta);
  require_contractible(model);

  ClassificationReport rep;
  rep.delta_Y = log_pullback_unchecked(model, delta);
  rep.notes.push_back("base field characteristic is not modelled; the intersection calculus is characteristic-free");

  if (snc_verified(model.config)) {
    rep.lc = all_at_most_one(rep.delta_Y) ? Verdict::yes_because("all coefficients of Delta_Y are <= 1 on a log resolution")
                                          : Verdict::no_because("Delta_Y has a coefficient > 1");
    rep.klt = all_below_one(rep.delta_Y) ? Verdict::yes_because("all coefficients of Delta_Y are < 1 on a log resolution")
                                         : Verdict::no_because("Delta_Y has a coefficient >= 1");
    rep.notes.push_back("klt/lc read off one log resolution, which suffices for every resolution");
    rep.notes.push_back(model.config.points.empty() ? "SNC attested without a points table (trusted)"
                                                    : "SNC verified against the points table");
  } else {
    const std::string why = model.config.snc_attested ? "NotLogResolution: points table contradicts the SNC attestation"
                                                      : "NotLogResolution: model is not attested simple normal crossing";
    rep.lc = Verdict::undecided_because(why);
    rep.klt = Verdict::undecided_because(why);
  }

  const SingularModel minres = minimal_resolution(model);
  rep.minres_contracted = minres.contracted;
  rep.delta_minres = log_pullback_unchecked(minres, delta);
  if (!rep.delta_minres.is_effective()) {
    rep.notes.push_back("negativity lemma violated on the minimal resolution: input is inconsistent");
  }
  rep.mrlc = all_at_most_one(rep.delta_minres) ? Verdict::yes_because("coefficients <= 1 on the minimal resolution")
                                               : Verdict::no_because("coefficient > 1 on the minimal resolution");

  bool all_certified = true;
  for (const auto& comp : contracted_components(model)) {
    PointCertificate pc{comp, fundamental_cycle(model, comp), asserted(model, comp)};
    all_certified = all_certified && pc.certified();
    rep.points.push_back(std::move(pc));
  }
  rep.q_factorial = all_certified ? Verdict::yes_because("every singular point is rational or asserted Q-factorial")
                                  : Verdict::undecided_because("certificate absent: a non-rational point");

  std::set<std::string> forced;
  std::vector<std::string> rest;
  for (const auto& id : model.contracted) {
    const Rational c = rep.delta_Y.coeff(id);
    if (c.sign() < 0 || c > Rational(1)) {
      forced.insert(id);
    } else {
      rest.push_back(id);
    }
  }
  if (model.contracted.size() > options.max_subset) {
    rep.gmrlc = Verdict::undecided_because("witness search skipped: " + std::to_string(model.contracted.size()) +
                                           " contracted curves exceed the cap of " + std::to_string(options.max_subset));
  } else if (auto w = find_gmrlc_witness(model, forced, rest)) {
    rep.gmrlc = Verdict::yes_because("witness contraction T = " + join(*w));
    rep.gmrlc_witness = std::move(w);
  } else {
    rep.gmrlc = Verdict::no_because("no witness among partial contractions of the supplied resolution");
  }
  return rep;
}

MultiplierFloor multiplier_floor(const SingularModel& model, const Divisor& delta) {
  if (!snc_verified(model.config)) {
    throw Error(ErrorCode::NotLogResolution, "multiplier ideal needs an SNC log resolution");
  }
  MultiplierFloor out;
  out.floor = round_ops(log_pullback(model, delta)).floor;
  out.klt_equiv = std::none_of(out.floor.begin(), out.floor.end(), [](const auto& t) { return t.second.sign() > 0; });
  return out;
}

bool nonvanishing_degree_check(const CurveDatum& d, long m) {
  if (d.genus < 0) throw Error(ErrorCode::InvalidCurveData, "negative genus");
  if (d.deg_d < 0) throw Error(ErrorCode::InvalidCurveData, "D must be nef (deg D >= 0)");
  if (d.deg_ceil_neg_g < 0) throw Error(ErrorCode::InvalidCurveData, "round-up of -G must be effective");
  if (d.a <= 0) throw Error(ErrorCode::InvalidCurveData, "a must be positive");
  if (d.deg_k_plus_frac_g < Rational(2 * d.genus - 2)) {
    throw Error(ErrorCode::InvalidCurveData, "deg(K_C + {G}) is below 2g-2");
  }
  if (d.genus == 0) return m >= 0;
  if (m < d.a) return false;
  // aD - (K_C + G) ample: a deg D - deg(K_C + {G}) + deg ceil(-G) > 0.
  if (Rational(d.a * d.deg_d + d.deg_ceil_neg_g) - d.deg_k_plus_frac_g <= Rational(0)) return false;
  return m * d.deg_d + d.deg_ceil_neg_g - d.genus + 1 > 0;
}

ThetaDecomposition theta_construction(const SingularModel& model, const Divisor& delta, const std::set<std::string>& over) {
  const Divisor delta_y = log_pullback_unchecked(model, delta);
  for (const auto& id : over) {
    const std::size_t i = model.config.index(id);
    const Rational deg = Rational(model.config.curve(i).k_dot) + model.config.intersect(delta_y, i);
    if (deg.sign() > 0) {
      throw Error(ErrorCode::NotNefOver, "(K_Y + Delta_Y) . " + id + " = " + deg.str() + " > 0");
    }
  }
  const Divisor fixed = delta_y.restricted(over, false);
  ThetaDecomposition out;
  out.theta = fixed + exceptional_completion(model.config, over, fixed, true);
  for (const auto& [id, c] : out.theta) {
    if (c.sign() > 0) out.plus.set(id, c);
    if (c.sign() < 0) out.minus.set(id, -c);
  }
  if (!out.theta.leq(delta_y)) throw Error(ErrorCode::Internal, "negativity lemma failed: Theta exceeds Delta_Y");
  return out;
}

}  // namespace logsurf
