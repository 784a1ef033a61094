#pragma once

#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "logsurf/singular_model.hpp"

namespace logsurf {

/// Three-valued verdict; `reason` explains an undecided or qualified answer.
struct Verdict {
  enum class State { yes, no, undecided };
  State state = State::undecided;
  std::string reason;

  static Verdict yes_because(std::string why = {}) { return {State::yes, std::move(why)}; }
  static Verdict no_because(std::string why = {}) { return {State::no, std::move(why)}; }
  static Verdict undecided_because(std::string why) { return {State::undecided, std::move(why)}; }

  bool is_yes() const { return state == State::yes; }
  bool is_no() const { return state == State::no; }
  bool decided() const { return state != State::undecided; }

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

std::string_view to_string(Verdict::State s);

/// Boundary coefficients outside [0, 1], or components on contracted/unknown
/// curves, as violations.
std::vector<Violation> boundary_violations(const SingularModel& model, const Divisor& delta);

/// Delta_Y = Delta + sum c_i E_i with (K_Y + Delta_Y) . E_i = 0.
/// Throws BoundaryOutOfRange when Delta is not a boundary (coefficients in [0,1]).
Divisor log_pullback(const SingularModel& model, const Divisor& delta);
/// Same computation without the boundary check, for exploratory input.
Divisor log_pullback_unchecked(const SingularModel& model, const Divisor& delta);

struct RoundedDivisor {
  Divisor floor;
  Divisor ceil;
  Divisor frac;
};

RoundedDivisor round_ops(const Divisor& d);

/// Picks which (-1)-curve to blow down next among the candidates (sorted by id).
using BlowDownChooser = std::function<std::string(std::span<const std::string>)>;

/// Blows down contracted (-1)-curves of genus 0 until none remain. The
/// result has K_Y . E >= 0 on every contracted curve.
SingularModel minimal_resolution(const SingularModel& model);
SingularModel minimal_resolution(const SingularModel& model, const BlowDownChooser& choose);

struct FundamentalCycle {
  Divisor cycle;
  long arithmetic_genus = 0;
  bool rational() const { return arithmetic_genus == 0; }
};

/// Laufer's algorithm on a connected set of contracted curves: start from the
/// reduced cycle and add E_i while Z . E_i > 0. p_a(Z) = 1 + (Z^2 + K.Z)/2.
/// Throws NotConnected, NotNegativeDefinite, UnknownCurve, or
/// ContractedSupport when a curve is not contracted.
FundamentalCycle fundamental_cycle(const SingularModel& model, const Component& component);

struct PointCertificate {
  Component curves;
  FundamentalCycle cycle;
  bool asserted_q_factorial = false;
  bool certified() const { return cycle.rational() || asserted_q_factorial; }
};

struct ClassificationReport {
  Verdict klt;
  Verdict lc;
  Verdict mrlc;
  Verdict gmrlc;
  /// Contraction subset T of the supplied resolution realising GMRLC.
  std::optional<std::set<std::string>> gmrlc_witness;
  Verdict q_factorial;
  std::vector<PointCertificate> points;
  Divisor delta_Y;
  /// Delta on the minimal resolution, with its contracted set.
  Divisor delta_minres;
  std::set<std::string> minres_contracted;
  std::vector<std::string> notes;
};

struct ClassifyOptions {
  /// Witness search runs only when the contracted set has at most this many curves.
  std::size_t max_subset = 20;
};

/// Reads MMP_SURFACE_MAX_SUBSET, falling back to 20.
ClassifyOptions classify_options_from_env();

/// klt/lc on the supplied model when it is a verified log resolution, MRLC on
/// the minimal resolution, GMRLC by searching contraction subsets T of the
/// contracted set whose complement carries coefficients in [0,1] and whose
/// points are all certified Q-factorial. Throws BoundaryOutOfRange.
ClassificationReport classify(const SingularModel& model, const Divisor& delta, const ClassifyOptions& options = {});

struct MultiplierFloor {
  Divisor floor;
  bool klt_equiv = false;
};

/// floor(Delta_Y) on a log resolution; the multiplier ideal is trivial exactly
/// when this has no positive coefficient. Throws NotLogResolution.
MultiplierFloor multiplier_floor(const SingularModel& model, const Divisor& delta);

struct CurveDatum {
  long genus = 0;
  long deg_d = 0;              // deg D, D nef
  long deg_ceil_neg_g = 0;     // deg of the round-up of -G
  Rational deg_k_plus_frac_g;  // deg(K_C + {G})
  long a = 1;                  // aD - (K_C + G) ample
};

/// Riemann-Roch non-vanishing of H^0(C, mD + ceil(-G)) for a curve datum:
/// on P^1 every m >= 0 works; otherwise it needs m >= a and the Euler
/// characteristic m deg D + deg ceil(-G) - g + 1 to be positive.
/// Throws InvalidCurveData for negative genus or inconsistent degrees.
bool nonvanishing_degree_check(const CurveDatum& datum, long m);

struct ThetaDecomposition {
  Divisor theta;
  Divisor plus;
  Divisor minus;
};

/// The divisor Theta <= Delta_Y agreeing with Delta_Y off `over` and making
/// K_Y + Theta numerically trivial on `over`. Requires -(K_Y + Delta_Y) nef on
/// `over` (NotNefOver otherwise).
ThetaDecomposition theta_construction(const SingularModel& model, const Divisor& delta, const std::set<std::string>& over);

}  // namespace logsurf
