#pragma once

#include <map>
#include <set>
#include <string>

#include "logsurf/rational.hpp"

namespace logsurf {

/// Formal Q-linear combination of curves, keyed by curve id. Zero
/// coefficients are never stored, so two divisors compare equal exactly when
/// they agree as mathematical objects.
class Divisor {
 public:
  using Map = std::map<std::string, Rational>;

  Divisor() = default;
  Divisor(std::initializer_list<Map::value_type> terms);

  Rational coeff(const std::string& id) const;
  void set(const std::string& id, const Rational& value);
  void add(const std::string& id, const Rational& value);

  bool is_zero() const { return terms_.empty(); }
  bool is_effective() const;
  std::set<std::string> support() const;
  std::size_t size() const { return terms_.size(); }

  Map::const_iterator begin() const { return terms_.begin(); }
  Map::const_iterator end() const { return terms_.end(); }

  Divisor& operator+=(const Divisor& o);
  Divisor& operator-=(const Divisor& o);
  Divisor& operator*=(const Rational& s);
  friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
  friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
  friend Divisor operator*(const Rational& s, Divisor d) { return d *= s; }
  Divisor operator-() const;

  /// Componentwise comparison D <= E.
  bool leq(const Divisor& o) const;

  /// Keeps only the listed ids (or drops them when `keep` is false).
  Divisor restricted(const std::set<std::string>& ids, bool keep = true) const;

  friend bool operator==(const Divisor&, const Divisor&) = default;

  std::string str() const;

 private:
  Map terms_;
};

}  // namespace logsurf
