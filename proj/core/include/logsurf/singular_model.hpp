#pragma once

#include <set>
#include <string>
#include <vector>

#include "logsurf/curve_config.hpp"

namespace logsurf {

/// A normal surface X presented through its resolution f: Y -> X. The
/// contracted curves are the f-exceptional ones; every other curve of Y is
/// the strict transform of a curve on X.
struct SingularModel {
  CurveConfig config;
  std::set<std::string> contracted;
  /// Connected contracted components whose images are asserted Q-factorial
  /// points without a rationality certificate.
  std::vector<std::set<std::string>> q_factorial_points;

  bool is_contracted(const std::string& id) const { return contracted.count(id) != 0; }

  /// True when every curve carries a fan ray; the non-contracted curves then
  /// generate the whole Mori cone of X.
  bool is_toric() const;

  friend bool operator==(const SingularModel&, const SingularModel&) = default;
};

using Component = std::set<std::string>;

/// Connected components of the dual graph restricted to `ids`, ordered by
/// their smallest id.
std::vector<Component> connected_components(const CurveConfig& config, const std::set<std::string>& ids);
std::vector<Component> contracted_components(const SingularModel& model);

/// Config violations plus unknown contracted ids and non-negative-definite
/// contracted components.
std::vector<Violation> validate(const SingularModel& model);

/// Throws NotContractible when some contracted component is not negative definite.
void require_contractible(const SingularModel& model);

/// Curves of Y that survive on X, in config order.
std::vector<std::string> surviving_curves(const SingularModel& model);

/// Numerical pullback D_Y = D + sum c_i E_i with D_Y . E_i = 0 for every
/// contracted E_i. Throws ContractedSupport if D touches contracted curves.
Divisor mumford_pullback(const SingularModel& model, const Divisor& d);

/// Drops contracted components.
Divisor pushforward(const SingularModel& model, const Divisor& d_y);

/// Mumford's rational intersection pairing on X.
Rational intersect_on_X(const SingularModel& model, const Divisor& d1, const Divisor& d2);

/// Returns sum c_i E_i over the curves `over` such that
/// (K_Y [if with_canonical] + fixed + sum c_i E_i) . E_j = 0 for every E_j in
/// `over`. `fixed` must not touch `over`. Throws NotContractible when the
/// intersection matrix of `over` is not negative definite.
Divisor exceptional_completion(const CurveConfig& config, const std::set<std::string>& over,
                               const Divisor& fixed, bool with_canonical);

}  // namespace logsurf
