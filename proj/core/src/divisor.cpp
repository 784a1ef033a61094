#include "logsurf/divisor.hpp"

#include <sstream>

namespace logsurf {

Divisor::Divisor(std::initializer_list<Map::value_type> terms) {
  for (const auto& [id, c] : terms) add(id, c);
}

Rational Divisor::coeff(const std::string& id) const {
  const auto it = terms_.find(id);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Divisor::set(const std::string& id, const Rational& value) {
  if (value.is_zero()) {
    terms_.erase(id);
  } else {
    terms_[id] = value;
  }
}

void Divisor::add(const std::string& id, const Rational& value) {
  if (value.is_zero()) return;
  set(id, coeff(id) + value);
}

bool Divisor::is_effective() const {
  for (const auto& [id, c] : terms_) {
    if (c.sign() < 0) return false;
  }
  return true;
}

std::set<std::string> Divisor::support() const {
  std::set<std::string> s;
  for (const auto& [id, c] : terms_) s.insert(id);
  return s;
}

Divisor& Divisor::operator+=(const Divisor& o) {
  for (const auto& [id, c] : o.terms_) add(id, c);
  return *this;
}

Divisor& Divisor::operator-=(const Divisor& o) {
  for (const auto& [id, c] : o.terms_) add(id, -c);
  return *this;
}

Divisor& Divisor::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [id, c] : terms_) c *= s;
  return *this;
}

Divisor Divisor::operator-() const {
  Divisor d = *this;
  for (auto& [id, c] : d.terms_) c = -c;
  return d;
}

bool Divisor::leq(const Divisor& o) const { return (o - *this).is_effective(); }

Divisor Divisor::restricted(const std::set<std::string>& ids, bool keep) const {
  Divisor d;
  for (const auto& [id, c] : terms_) {
    if ((ids.count(id) != 0) == keep) d.terms_.emplace(id, c);
  }
  return d;
}

std::string Divisor::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [id, c] : terms_) {
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    const Rational a = c.abs();
    if (a != Rational(1)) os << a << "*";
    os << id;
    first = false;
  }
  return os.str();
}

}  // namespace logsurf
