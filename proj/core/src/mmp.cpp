#include "logsurf/mmp.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "logsurf/errors.hpp"
#include "logsurf/linalg.hpp"

namespace logsurf {

std::string_view to_string(RayKind k) {
  switch (k) {
    case RayKind::birational: return "birational";
    case RayKind::fiber_type: return "fiber-type";
    case RayKind::ample_anti: return "ample-anti";
  }
  return "birational";
}

CurveClasses curve_classes(const SingularModel& model, const std::vector<std::string>& curves) {
  CurveClasses out;
  out.curves = curves;
  out.test_curves = surviving_curves(model);
  std::vector<std::size_t> test_idx;
  for (const auto& id : out.test_curves) test_idx.push_back(model.config.index(id));
  std::vector<std::size_t> curve_idx;
  for (const auto& id : curves) {
    curve_idx.push_back(model.config.index(id));
    if (model.is_contracted(id)) {
      throw Error(ErrorCode::ContractedSupport, "'" + id + "' is contracted; divisors on X live on surviving curves");
    }
  }
  // C.S on X is C.S - S.E M^-1 E.C with M the intersection matrix of the contracted curves E.
  std::vector<std::size_t> exc_idx;
  for (const auto& id : model.contracted) exc_idx.push_back(model.config.index(id));
  QMatrix correction(exc_idx.size(), curve_idx.size());
  if (!exc_idx.empty()) {
    const QMatrix m = model.config.intersection_matrix(exc_idx);
    if (!is_negative_definite(m)) {
      throw Error(ErrorCode::NotContractible, "the contracted curves do not have a negative definite intersection matrix");
    }
    QMatrix rhs(exc_idx.size(), curve_idx.size());
    for (std::size_t e = 0; e < exc_idx.size(); ++e) {
      for (std::size_t c = 0; c < curve_idx.size(); ++c) rhs(e, c) = Rational(model.config.meet(exc_idx[e], curve_idx[c]));
    }
    correction = solve_linear(m, rhs);
  }
  for (std::size_t c = 0; c < curve_idx.size(); ++c) {
    QVector v(test_idx.size());
    for (std::size_t j = 0; j < test_idx.size(); ++j) {
      Rational x(model.config.meet(curve_idx[c], test_idx[j]));
      for (std::size_t e = 0; e < exc_idx.size(); ++e) {
        const long se = model.config.meet(test_idx[j], exc_idx[e]);
        if (se != 0 && !correction(e, c).is_zero()) x -= Rational(se) * correction(e, c);
      }
      v[j] = std::move(x);
    }
    out.classes.push_back(std::move(v));
  }
  out.rank = out.classes.empty() ? 0 : rank(QMatrix::from_columns(out.classes, out.test_curves.size()));
  return out;
}

namespace {

// Scales v so that its first nonzero entry is +1 or -1; positive multiples
// of one vector normalise identically.
QVector normalise(const QVector& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) {
      const Rational s = Rational(1) / x.abs();
      QVector out = v;
      for (auto& y : out) y *= s;
      return out;
    }
  }
  return v;
}

bool is_zero_vector(const QVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

}  // namespace

std::vector<std::vector<std::size_t>> extremal_generators(const std::vector<QVector>& generators) {
  std::vector<QVector> reps;
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (is_zero_vector(generators[i])) continue;
    const QVector n = normalise(generators[i]);
    const auto it = std::find(reps.begin(), reps.end(), n);
    if (it == reps.end()) {
      reps.push_back(n);
      groups.push_back({i});
    } else {
      groups[static_cast<std::size_t>(it - reps.begin())].push_back(i);
    }
  }
  // Cone membership only depends on coordinates that are independent on the span.
  if (!reps.empty()) {
    QMatrix rows(reps.size(), reps.front().size());
    for (std::size_t i = 0; i < reps.size(); ++i) {
      for (std::size_t j = 0; j < reps[i].size(); ++j) rows(i, j) = reps[i][j];
    }
    const auto coords = pivot_columns(rows);
    for (auto& v : reps) {
      QVector p;
      for (auto j : coords) p.push_back(v[j]);
      v = std::move(p);
    }
  }
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t g = 0; g < reps.size(); ++g) {
    std::vector<QVector> others;
    for (std::size_t h = 0; h < reps.size(); ++h) {
      if (h != g) others.push_back(reps[h]);
    }
    if (!find_nonnegative_combination(others, reps[g])) out.push_back(groups[g]);
  }
  return out;
}

namespace {

std::vector<std::string> filter_universe(const SingularModel& model, const std::vector<std::string>& universe,
                                         bool vertical_only) {
  if (universe.empty()) throw Error(ErrorCode::EmptyUniverse, "curve universe is empty");
  std::vector<std::string> out;
  for (const auto& id : universe) {
    const auto& c = model.config.curve(id);
    if (model.is_contracted(id)) throw Error(ErrorCode::ContractedSupport, "universe curve '" + id + "' is contracted");
    if (!vertical_only || c.vertical) out.push_back(id);
  }
  if (out.empty()) throw Error(ErrorCode::EmptyUniverse, "no vertical curves in the universe");
  return out;
}

Rational kdelta_degree(const SingularModel& model, const Divisor& delta_y, const std::string& id) {
  const std::size_t i = model.config.index(id);
  return Rational(model.config.curve(i).k_dot) + model.config.intersect(delta_y, i);
}

}  // namespace

std::vector<RayCandidate> extremal_rays(const SingularModel& model, const Divisor& delta,
                                        const std::vector<std::string>& universe, bool vertical_only) {
  const auto curves = filter_universe(model, universe, vertical_only);
  const Divisor delta_y = log_pullback_unchecked(model, delta);
  const CurveClasses cls = curve_classes(model, curves);
  std::map<std::string, std::size_t> test_pos;
  for (std::size_t j = 0; j < cls.test_curves.size(); ++j) test_pos[cls.test_curves[j]] = j;

  std::vector<RayCandidate> out;
  for (const auto& group : extremal_generators(cls.classes)) {
    RayCandidate ray;
    bool have = false;
    for (std::size_t i : group) {
      const std::string& id = curves[i];
      ray.curves_on_ray.push_back(id);
      const Rational deg = kdelta_degree(model, delta_y, id);
      if (!have || deg > ray.kdelta_deg || (deg == ray.kdelta_deg && id < ray.curve)) {
        ray.curve = id;
        ray.kdelta_deg = deg;
        ray.self_int_X = cls.classes[i][test_pos.at(id)];
        have = true;
      }
    }
    if (ray.kdelta_deg.sign() >= 0) continue;
    std::sort(ray.curves_on_ray.begin(), ray.curves_on_ray.end());
    if (ray.self_int_X.sign() < 0) {
      ray.kind = RayKind::birational;
    } else if (ray.self_int_X.is_zero()) {
      ray.kind = RayKind::fiber_type;
    } else if (cls.rank == 1) {
      ray.kind = RayKind::ample_anti;
    } else {
      throw Error(ErrorCode::InconsistentUniverse,
                  "extremal class of '" + ray.curve + "' has positive square in Picard rank " + std::to_string(cls.rank) +
                      "; the universe is missing curves");
    }
    out.push_back(std::move(ray));
  }
  std::sort(out.begin(), out.end(), [](const RayCandidate& a, const RayCandidate& b) {
    if (a.kdelta_deg != b.kdelta_deg) return a.kdelta_deg < b.kdelta_deg;
    return a.curve < b.curve;
  });
  return out;
}

std::optional<Rational> canonical_square(const SingularModel& model) {
  const auto surviving = surviving_curves(model);
  if (surviving.empty()) return std::nullopt;
  const CurveClasses cls = curve_classes(model, surviving);
  const Divisor k_correction = exceptional_completion(model.config, model.contracted, {}, true);
  const std::size_t n = surviving.size();
  QMatrix gram(n, n);
  QVector k(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) gram(i, j) = cls.classes[i][j];
    const std::size_t ci = model.config.index(surviving[i]);
    k[i] = Rational(model.config.curve(ci).k_dot) + model.config.intersect(k_correction, ci);
  }
  const auto x = solve_consistent(gram, k);
  if (!x) return std::nullopt;
  return dot(*x, k);
}

bool is_projective_plane(const SingularModel& model) {
  if (!minimal_resolution(model).contracted.empty()) return false;
  const auto surviving = surviving_curves(model);
  if (surviving.empty() || curve_classes(model, surviving).rank != 1) return false;
  const auto k2 = canonical_square(model);
  return k2 && *k2 == Rational(9);
}

bool check_extremal_bound(const SingularModel& model, const Divisor& delta, const RayCandidate& ray) {
  (void)delta;
  const Rational neg = -ray.kdelta_deg;
  if (neg.sign() <= 0) return false;
  if (neg <= Rational(2)) return true;
  return neg <= Rational(3) && is_projective_plane(model);
}

namespace {

// contract_ray with the Picard rank of the input already known; returns the
// contracted model and its rank.
std::pair<SingularModel, std::size_t> contract_with_rank(const SingularModel& model, const RayCandidate& ray,
                                                         std::size_t rank_before) {
  if (ray.kind != RayKind::birational) {
    throw Error(ErrorCode::NotBirationalRay, "ray of '" + ray.curve + "' is " + std::string(to_string(ray.kind)));
  }
  if (model.is_contracted(ray.curve)) throw Error(ErrorCode::ContractedSupport, "'" + ray.curve + "' is already contracted");
  SingularModel after = model;
  after.contracted.insert(ray.curve);
  try {
    require_contractible(after);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotContractible) throw;
    throw Error(ErrorCode::ContractionNotNegDef, "contracting '" + ray.curve + "': " + e.what());
  }
  const std::size_t rank_after = curve_classes(after, surviving_curves(after)).rank;
  if (rank_before != rank_after + 1) {
    throw Error(ErrorCode::InconsistentUniverse, "contracting '" + ray.curve + "' changed the Picard rank from " +
                                                     std::to_string(rank_before) + " to " + std::to_string(rank_after));
  }
  return {std::move(after), rank_after};
}

}  // namespace

SingularModel contract_ray(const SingularModel& model, const RayCandidate& ray) {
  if (ray.kind == RayKind::birational && !model.is_contracted(ray.curve)) {
    return contract_with_rank(model, ray, curve_classes(model, surviving_curves(model)).rank).first;
  }
  return contract_with_rank(model, ray, 0).first;
}

namespace {

const RayCandidate& pick(const std::vector<const RayCandidate*>& rays) {
  return **std::min_element(rays.begin(), rays.end(), [](const RayCandidate* a, const RayCandidate* b) {
    if (a->kdelta_deg != b->kdelta_deg) return a->kdelta_deg < b->kdelta_deg;
    return a->curve < b->curve;
  });
}

void check_preserved(const char* what, const Verdict& initial, const Verdict& now, std::size_t step,
                     std::vector<std::string>& violations) {
  if (initial.is_yes() && !now.is_yes()) {
    violations.push_back(std::string(what) + " lost after step " + std::to_string(step));
  }
}

}  // namespace

MMPTrace run_mmp(const SingularModel& model, const Divisor& delta, std::vector<std::string> universe,
                 bool vertical_only, const MMPOptions& options) {
  MMPTrace trace;
  trace.initial = model;
  trace.initial_delta = delta;
  trace.vertical_only = vertical_only;
  trace.initial_classification = classify(model, delta, options.classify);
  if (!trace.initial_classification.gmrlc.is_yes()) {
    throw Error(ErrorCode::NotGMRLC, "the pair is not certified GMRLC (" + trace.initial_classification.gmrlc.reason + ")");
  }
  const auto used = filter_universe(model, universe, vertical_only);
  {
    auto sorted_universe = universe;
    auto surviving = surviving_curves(model);
    std::sort(sorted_universe.begin(), sorted_universe.end());
    std::sort(surviving.begin(), surviving.end());
    trace.universe_complete = model.is_toric() && !vertical_only && sorted_universe == surviving;
  }
  trace.universe = universe;
  trace.initial_rank = curve_classes(model, used).rank;

  SingularModel cur = model;
  Divisor cur_delta = delta;
  std::size_t cur_rank = curve_classes(model, surviving_curves(model)).rank;
  const auto& init = trace.initial_classification;
  for (;;) {
    const auto rays = extremal_rays(cur, cur_delta, universe, vertical_only);
    auto& stage = trace.stages.emplace_back();
    for (const auto& r : rays) {
      const bool ok = check_extremal_bound(cur, cur_delta, r);
      if (!ok) {
        trace.violations.push_back("ray of '" + r.curve + "' breaks 0 < -(K+Delta).C <= 2, or 3 on the plane (degree " +
                                   r.kdelta_deg.str() + ")");
      }
      stage.push_back({r, ok});
    }

    if (rays.empty()) {
      GoodMinimalModel gm;
      for (const auto& id : filter_universe(cur, universe, vertical_only)) {
        gm.nef_certificate.emplace_back(id, kdelta_degree(cur, log_pullback_unchecked(cur, cur_delta), id));
      }
      if (cur.is_toric()) {
        Divisor kx;
        for (const auto& id : surviving_curves(cur)) kx.set(id, Rational(-1));
        const auto w = nef_semiample_witness(cur, kx + cur_delta);
        if (const auto* sw = std::get_if<SemiampleWitness>(&w)) {
          gm.semiample = *sw;
          gm.abundance = "semi-ample: toric polytope witness";
        } else {
          trace.violations.push_back("no negative ray but K+Delta is not nef on '" + std::get<NotNef>(w).curve + "'");
        }
      } else {
        gm.abundance = "nef; semi-ample by the abundance theorem for GMRLC pairs (trusted, not constructed)";
      }
      trace.outcome = std::move(gm);
      break;
    }

    std::vector<const RayCandidate*> birational;
    std::vector<const RayCandidate*> fibering;
    for (const auto& r : rays) (r.kind == RayKind::birational ? birational : fibering).push_back(&r);

    if (birational.empty()) {
      const RayCandidate& r = pick(fibering);
      MoriFiberSpace mfs;
      mfs.ray = r;
      mfs.base_dimension = r.kind == RayKind::fiber_type ? 1 : 0;
      mfs.picard_rank = curve_classes(cur, filter_universe(cur, universe, vertical_only)).rank;
      mfs.certificate = r.kind == RayKind::fiber_type
                            ? "extremal nef class of square 0 with (K+Delta)-degree " + r.kdelta_deg.str()
                            : "Picard rank 1 and (K+Delta)-degree " + r.kdelta_deg.str() + " < 0 (anti-ample)";
      trace.outcome = std::move(mfs);
      break;
    }

    const RayCandidate& r = pick(birational);
    MMPStep step;
    step.ray = r;
    step.before = cur;
    std::tie(step.after, step.rank_after) = contract_with_rank(cur, r, cur_rank);
    cur_rank = step.rank_after;
    step.delta = pushforward(step.after, cur_delta);
    step.classification = classify(step.after, step.delta, options.classify);
    step.bound_ok = stage.empty() ? true : std::find_if(stage.begin(), stage.end(), [&](const RayCheck& c) {
                                             return c.ray.curve == r.curve;
                                           })->bound_ok;
    universe.erase(std::remove(universe.begin(), universe.end(), r.curve), universe.end());

    const std::size_t n = trace.steps.size() + 1;
    if (!step.classification.gmrlc.is_yes()) trace.violations.push_back("GMRLC lost after step " + std::to_string(n));
    check_preserved("lc", init.lc, step.classification.lc, n, trace.violations);
    check_preserved("MRLC", init.mrlc, step.classification.mrlc, n, trace.violations);
    check_preserved("certified Q-factoriality", init.q_factorial, step.classification.q_factorial, n, trace.violations);

    cur = step.after;
    cur_delta = step.delta;
    if (options.on_step) options.on_step(step);
    trace.steps.push_back(std::move(step));
    if (universe.empty()) throw Error(ErrorCode::EmptyUniverse, "universe exhausted after a contraction");
  }
  if (trace.initial_rank >= 1 && trace.steps.size() > trace.initial_rank - 1) {
    trace.violations.push_back("more birational steps than rho - 1");
  }
  trace.final_model = cur;
  trace.final_delta = cur_delta;
  return trace;
}

}  // namespace logsurf
