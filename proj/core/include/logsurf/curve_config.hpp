#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "logsurf/divisor.hpp"
#include "logsurf/qmatrix.hpp"

namespace logsurf {

struct CurveRecord {
  std::string id;
  long self_int = 0;
  long genus = 0;  // arithmetic genus p_a
  long k_dot = 0;  // K_Y . C
  /// Maps to a point of the base S of a relative run; with S a point every curve is vertical.
  bool vertical = true;
  /// Primitive ray of the fan when the curve is torus invariant.
  std::optional<std::array<long, 2>> toric_ray;

  friend bool operator==(const CurveRecord&, const CurveRecord&) = default;
};

/// A node of the SNC points table: a point of Y and the curves through it.
struct SncPoint {
  std::string id;
  std::vector<std::string> curves;

  friend bool operator==(const SncPoint&, const SncPoint&) = default;
};

struct Violation {
  std::string subject;  // curve id, "C|D" pair, point id or "model"
  std::string rule;
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Curves on a smooth projective surface Y together with their intersection
/// numbers. The intersection table is stored symmetric; self-intersections
/// live on the curve records.
class CurveConfig {
 public:
  CurveConfig() = default;

  /// Appends a curve with zero intersections against existing curves.
  /// Throws InvalidCurveData on a duplicate id.
  std::size_t add_curve(CurveRecord record);
  void set_intersection(const std::string& a, const std::string& b, long n);
  void set_intersection(std::size_t a, std::size_t b, long n);

  std::size_t size() const { return curves_.size(); }
  const std::vector<CurveRecord>& curves() const { return curves_; }
  const CurveRecord& curve(std::size_t i) const { return curves_.at(i); }
  const CurveRecord& curve(const std::string& id) const { return curves_.at(index(id)); }
  CurveRecord& mutable_curve(std::size_t i) { return curves_.at(i); }

  bool contains(const std::string& id) const { return index_.count(id) != 0; }
  /// Throws UnknownCurve.
  std::size_t index(const std::string& id) const;

  /// C_i . C_j, with the self-intersection on the diagonal.
  long meet(std::size_t i, std::size_t j) const;
  long meet(const std::string& a, const std::string& b) const { return meet(index(a), index(b)); }

  QMatrix intersection_matrix(std::span<const std::size_t> idx) const;
  QMatrix intersection_matrix() const;

  /// D1 . D2 on Y by bilinearity.
  Rational intersect(const Divisor& d1, const Divisor& d2) const;
  /// D . C for a single curve.
  Rational intersect(const Divisor& d, std::size_t curve) const;
  /// K_Y . D.
  Rational canonical_degree(const Divisor& d) const;

  bool snc_attested = false;
  std::vector<SncPoint> points;

  friend bool operator==(const CurveConfig&, const CurveConfig&) = default;

 private:
  std::vector<CurveRecord> curves_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::vector<long>> meet_;  // off-diagonal entries, symmetric
};

/// Empty iff adjunction holds on every curve, the table is symmetric with
/// nonnegative off-diagonal entries, and (when attested and a points table is
/// given) the points table certifies simple normal crossings.
std::vector<Violation> validate(const CurveConfig& config);

/// Combinatorial SNC verdict: attested, and consistent with the points table
/// when one is present.
bool snc_verified(const CurveConfig& config);

/// Contracts the (-1)-curve e: for the remaining curves
/// C.D += (C.e)(D.e), C^2 += (C.e)^2, K.C -= C.e, and p_a grows by
/// m(m-1)/2 where m = C.e so that adjunction survives.
/// Throws NotMinusOneCurve unless e has self-intersection -1 and genus 0.
CurveConfig blow_down(const CurveConfig& config, const std::string& e);

}  // namespace logsurf
