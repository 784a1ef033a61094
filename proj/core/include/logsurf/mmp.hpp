#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "logsurf/discrepancy.hpp"
#include "logsurf/toric.hpp"

namespace logsurf {

enum class RayKind { birational, fiber_type, ample_anti };

std::string_view to_string(RayKind k);

struct RayCandidate {
  /// Spanning curve: among universe curves on the ray, the one with the
  /// smallest -(K_X + Delta) degree, then the smallest id.
  std::string curve;
  Rational kdelta_deg;  // (K_X + Delta) . C
  Rational self_int_X;  // C . C on X
  RayKind kind = RayKind::birational;
  std::vector<std::string> curves_on_ray;

  friend bool operator==(const RayCandidate&, const RayCandidate&) = default;
};

/// Numerical classes of universe curves on X, each recorded as its vector of
/// Mumford intersection numbers against every surviving curve.
struct CurveClasses {
  std::vector<std::string> curves;
  std::vector<std::string> test_curves;
  std::vector<QVector> classes;
  std::size_t rank = 0;
};

CurveClasses curve_classes(const SingularModel& model, const std::vector<std::string>& curves);

/// Groups generators by ray and returns the groups spanning extremal rays of
/// their cone, each as indices into `generators`. Zero vectors are ignored.
std::vector<std::vector<std::size_t>> extremal_generators(const std::vector<QVector>& generators);

/// (K_X + Delta)-negative extremal rays of the cone spanned by the universe.
/// Throws EmptyUniverse, ContractedSupport, or InconsistentUniverse when an
/// extremal class of positive square shows up in Picard rank >= 2.
std::vector<RayCandidate> extremal_rays(const SingularModel& model, const Divisor& delta,
                                        const std::vector<std::string>& universe, bool vertical_only);

/// K_X^2, when K_X is numerically a combination of surviving curves.
std::optional<Rational> canonical_square(const SingularModel& model);

/// The numeric stand-in for X = P^2: X smooth (its minimal resolution
/// contracts nothing), rank one, K^2 = 9.
bool is_projective_plane(const SingularModel& model);

/// 0 < -(K + Delta) . C <= 3, and <= 2 off the plane.
bool check_extremal_bound(const SingularModel& model, const Divisor& delta, const RayCandidate& ray);

/// Adds the ray's curve to the contracted set. Throws NotBirationalRay or
/// ContractionNotNegDef; the Picard rank of X must drop by exactly one.
SingularModel contract_ray(const SingularModel& model, const RayCandidate& ray);

struct RayCheck {
  RayCandidate ray;
  bool bound_ok = true;
};

struct MMPStep {
  RayCandidate ray;
  SingularModel before;
  SingularModel after;
  Divisor delta;  // pushforward onto the new model
  ClassificationReport classification;
  bool bound_ok = true;
  std::size_t rank_after = 0;
};

struct GoodMinimalModel {
  /// (K + Delta) . C >= 0 for every universe curve.
  std::vector<std::pair<std::string, Rational>> nef_certificate;
  std::optional<SemiampleWitness> semiample;
  std::string abundance;
};

struct MoriFiberSpace {
  RayCandidate ray;
  int base_dimension = 0;
  /// Picard rank of X* is that of W plus one.
  std::size_t relative_picard_rank = 1;
  std::size_t picard_rank = 0;
  std::string certificate;
};

struct MMPTrace {
  SingularModel initial;
  Divisor initial_delta;
  std::vector<std::string> universe;
  bool vertical_only = false;
  bool universe_complete = false;
  std::size_t initial_rank = 0;
  ClassificationReport initial_classification;
  /// Rays found at each iteration, including the final one.
  std::vector<std::vector<RayCheck>> stages;
  std::vector<MMPStep> steps;
  std::variant<GoodMinimalModel, MoriFiberSpace> outcome;
  SingularModel final_model;
  Divisor final_delta;
  /// Failed preservation or bound checks; empty on a healthy run.
  std::vector<std::string> violations;

  std::size_t birational_steps() const { return steps.size(); }
  bool ends_in_mori_fiber_space() const { return std::holds_alternative<MoriFiberSpace>(outcome); }
};

struct MMPOptions {
  ClassifyOptions classify;
  std::function<void(const MMPStep&)> on_step;
};

/// Runs the (K + Delta)-MMP over the universe. Birational rays are contracted
/// first (most negative degree, then curve id); with none left the run ends in
/// a good minimal model or a Mori fiber space. Throws NotGMRLC.
MMPTrace run_mmp(const SingularModel& model, const Divisor& delta, std::vector<std::string> universe,
                 bool vertical_only, const MMPOptions& options = {});

}  // namespace logsurf
