#include "logsurf/singular_model.hpp"

#include <algorithm>
#include <queue>

#include "logsurf/errors.hpp"
#include "logsurf/linalg.hpp"

namespace logsurf {

bool SingularModel::is_toric() const {
  if (config.size() == 0) return false;
  return std::all_of(config.curves().begin(), config.curves().end(),
                     [](const CurveRecord& c) { return c.toric_ray.has_value(); });
}

std::vector<Component> connected_components(const CurveConfig& config, const std::set<std::string>& ids) {
  std::vector<Component> out;
  std::set<std::string> seen;
  for (const auto& start : ids) {
    if (seen.count(start)) continue;
    Component comp;
    std::queue<std::string> todo;
    todo.push(start);
    seen.insert(start);
    while (!todo.empty()) {
      const std::string cur = todo.front();
      todo.pop();
      comp.insert(cur);
      const std::size_t ci = config.index(cur);
      for (const auto& other : ids) {
        if (seen.count(other) || config.meet(ci, config.index(other)) == 0) continue;
        seen.insert(other);
        todo.push(other);
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<Component> contracted_components(const SingularModel& model) {
  return connected_components(model.config, model.contracted);
}

namespace {

std::vector<std::size_t> indices_of(const CurveConfig& config, const std::set<std::string>& ids) {
  std::vector<std::size_t> idx;
  idx.reserve(ids.size());
  for (const auto& id : ids) idx.push_back(config.index(id));
  return idx;
}

std::string join(const std::set<std::string>& ids) {
  std::string s;
  for (const auto& id : ids) s += (s.empty() ? "" : ",") + id;
  return "{" + s + "}";
}

}  // namespace

std::vector<Violation> validate(const SingularModel& model) {
  std::vector<Violation> out = validate(model.config);
  bool ids_ok = true;
  for (const auto& id : model.contracted) {
    if (!model.config.contains(id)) {
      out.push_back({id, "contracted.unknown_curve", "contracted id is not a configured curve"});
      ids_ok = false;
    }
  }
  for (const auto& pt : model.q_factorial_points) {
    for (const auto& id : pt) {
      if (!model.contracted.count(id)) {
        out.push_back({id, "q_factorial_points.not_contracted", "asserted Q-factorial point uses a non-contracted curve"});
      }
    }
  }
  if (!ids_ok) return out;
  for (const auto& comp : contracted_components(model)) {
    const auto idx = indices_of(model.config, comp);
    if (!is_negative_definite(model.config.intersection_matrix(idx))) {
      out.push_back({join(comp), "contracted.negative_definite", "intersection matrix of the component is not negative definite"});
    }
  }
  return out;
}

void require_contractible(const SingularModel& model) {
  for (const auto& comp : contracted_components(model)) {
    const auto idx = indices_of(model.config, comp);
    if (!is_negative_definite(model.config.intersection_matrix(idx))) {
      throw Error(ErrorCode::NotContractible, "component " + join(comp) + " is not negative definite");
    }
  }
}

std::vector<std::string> surviving_curves(const SingularModel& model) {
  std::vector<std::string> out;
  for (const auto& c : model.config.curves()) {
    if (!model.is_contracted(c.id)) out.push_back(c.id);
  }
  return out;
}

Divisor exceptional_completion(const CurveConfig& config, const std::set<std::string>& over, const Divisor& fixed,
                               bool with_canonical) {
  for (const auto& [id, c] : fixed) {
    config.index(id);
    if (over.count(id)) throw Error(ErrorCode::ContractedSupport, "divisor has a component '" + id + "' on the exceptional set");
  }
  if (over.empty()) return {};
  const auto idx = indices_of(config, over);
  const QMatrix m = config.intersection_matrix(idx);
  if (!is_negative_definite(m)) {
    throw Error(ErrorCode::NotContractible, "curves " + join(over) + " do not have a negative definite intersection matrix");
  }
  QVector rhs(idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k) {
    Rational b = config.intersect(fixed, idx[k]);
    if (with_canonical) b += Rational(config.curve(idx[k]).k_dot);
    rhs[k] = -b;
  }
  const QVector c = solve_linear(m, rhs);
  Divisor out;
  std::size_t k = 0;
  for (const auto& id : over) out.set(id, c[k++]);
  return out;
}

Divisor mumford_pullback(const SingularModel& model, const Divisor& d) {
  for (const auto& [id, c] : d) {
    model.config.index(id);
    if (model.is_contracted(id)) {
      throw Error(ErrorCode::ContractedSupport, "'" + id + "' is contracted; divisors on X live on surviving curves");
    }
  }
  return d + exceptional_completion(model.config, model.contracted, d, false);
}

Divisor pushforward(const SingularModel& model, const Divisor& d_y) { return d_y.restricted(model.contracted, false); }

Rational intersect_on_X(const SingularModel& model, const Divisor& d1, const Divisor& d2) {
  if (d1.is_zero() || d2.is_zero()) {
    // Still enforce the support precondition.
    mumford_pullback(model, d1);
    mumford_pullback(model, d2);
    return Rational(0);
  }
  // By the projection formula one side can stay a strict transform.
  return model.config.intersect(mumford_pullback(model, d1), d2);
}

}  // namespace logsurf
