#include "logsurf/curve_config.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "logsurf/errors.hpp"

namespace logsurf {

std::size_t CurveConfig::add_curve(CurveRecord record) {
  if (index_.count(record.id)) throw Error(ErrorCode::InvalidCurveData, "duplicate curve id '" + record.id + "'");
  const std::size_t i = curves_.size();
  index_.emplace(record.id, i);
  curves_.push_back(std::move(record));
  for (auto& row : meet_) row.push_back(0);
  meet_.emplace_back(curves_.size(), 0);
  return i;
}

void CurveConfig::set_intersection(const std::string& a, const std::string& b, long n) {
  set_intersection(index(a), index(b), n);
}

void CurveConfig::set_intersection(std::size_t a, std::size_t b, long n) {
  if (a == b) {
    curves_.at(a).self_int = n;
    return;
  }
  meet_.at(a).at(b) = n;
  meet_.at(b).at(a) = n;
}

std::size_t CurveConfig::index(const std::string& id) const {
  const auto it = index_.find(id);
  if (it == index_.end()) throw Error(ErrorCode::UnknownCurve, "unknown curve id '" + id + "'");
  return it->second;
}

long CurveConfig::meet(std::size_t i, std::size_t j) const {
  if (i == j) return curves_.at(i).self_int;
  return meet_.at(i).at(j);
}

QMatrix CurveConfig::intersection_matrix(std::span<const std::size_t> idx) const {
  QMatrix m(idx.size(), idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = 0; b < idx.size(); ++b) m(a, b) = meet(idx[a], idx[b]);
  }
  return m;
}

QMatrix CurveConfig::intersection_matrix() const {
  std::vector<std::size_t> idx(size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return intersection_matrix(idx);
}

Rational CurveConfig::intersect(const Divisor& d1, const Divisor& d2) const {
  Rational s;
  for (const auto& [a, x] : d1) {
    const std::size_t i = index(a);
    for (const auto& [b, y] : d2) {
      const long m = meet(i, index(b));
      if (m != 0) s += x * y * Rational(m);
    }
  }
  return s;
}

Rational CurveConfig::intersect(const Divisor& d, std::size_t curve) const {
  Rational s;
  for (const auto& [a, x] : d) {
    const long m = meet(index(a), curve);
    if (m != 0) s += x * Rational(m);
  }
  return s;
}

Rational CurveConfig::canonical_degree(const Divisor& d) const {
  Rational s;
  for (const auto& [a, x] : d) s += x * Rational(curve(a).k_dot);
  return s;
}

namespace {

std::vector<Violation> snc_violations(const CurveConfig& config) {
  std::vector<Violation> out;
  std::map<std::pair<std::size_t, std::size_t>, long> shared;
  for (const auto& p : config.points) {
    if (p.curves.size() != 2) {
      out.push_back({p.id, "snc.point_valence",
                     "point lies on " + std::to_string(p.curves.size()) + " curves; simple normal crossings need exactly 2"});
      continue;
    }
    if (!config.contains(p.curves[0]) || !config.contains(p.curves[1])) {
      out.push_back({p.id, "snc.unknown_curve", "point references an unknown curve"});
      continue;
    }
    std::size_t a = config.index(p.curves[0]);
    std::size_t b = config.index(p.curves[1]);
    if (a == b) {
      out.push_back({p.id, "snc.self_crossing", "curve '" + p.curves[0] + "' crosses itself"});
      continue;
    }
    if (a > b) std::swap(a, b);
    ++shared[{a, b}];
  }
  for (std::size_t i = 0; i < config.size(); ++i) {
    for (std::size_t j = i + 1; j < config.size(); ++j) {
      const long expected = config.meet(i, j);
      const auto it = shared.find({i, j});
      const long counted = it == shared.end() ? 0 : it->second;
      if (expected != counted) {
        out.push_back({config.curve(i).id + "|" + config.curve(j).id, "snc.transversality",
                       "intersection number " + std::to_string(expected) + " but " + std::to_string(counted) +
                           " shared points"});
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Violation> validate(const CurveConfig& config) {
  std::vector<Violation> out;
  for (std::size_t i = 0; i < config.size(); ++i) {
    const auto& c = config.curve(i);
    if (c.genus < 0) out.push_back({c.id, "genus.nonnegative", "arithmetic genus " + std::to_string(c.genus) + " < 0"});
    if (2 * c.genus - 2 != c.self_int + c.k_dot) {
      out.push_back({c.id, "adjunction",
                     "2g-2 = " + std::to_string(2 * c.genus - 2) + " but C^2 + K.C = " +
                         std::to_string(c.self_int + c.k_dot)});
    }
    if (c.toric_ray && std::gcd((*c.toric_ray)[0], (*c.toric_ray)[1]) != 1) {
      out.push_back({c.id, "toric_ray.primitive", "fan ray is not primitive"});
    }
  }
  for (std::size_t i = 0; i < config.size(); ++i) {
    for (std::size_t j = i + 1; j < config.size(); ++j) {
      const std::string pair = config.curve(i).id + "|" + config.curve(j).id;
      if (config.meet(i, j) != config.meet(j, i)) out.push_back({pair, "intersections.symmetric", "asymmetric entry"});
      if (config.meet(i, j) < 0) {
        out.push_back({pair, "intersections.nonnegative",
                       "distinct curves meet negatively (" + std::to_string(config.meet(i, j)) + ")"});
      }
    }
  }
  if (config.snc_attested && !config.points.empty()) {
    auto snc = snc_violations(config);
    out.insert(out.end(), snc.begin(), snc.end());
  }
  return out;
}

bool snc_verified(const CurveConfig& config) {
  if (!config.snc_attested) return false;
  return config.points.empty() || snc_violations(config).empty();
}

CurveConfig blow_down(const CurveConfig& config, const std::string& e) {
  const std::size_t ei = config.index(e);
  const auto& rec = config.curve(ei);
  if (rec.self_int != -1 || rec.genus != 0 || rec.k_dot != -1) {
    throw Error(ErrorCode::NotMinusOneCurve,
                "'" + e + "' has (C^2, p_a, K.C) = (" + std::to_string(rec.self_int) + ", " +
                    std::to_string(rec.genus) + ", " + std::to_string(rec.k_dot) + "), expected (-1, 0, -1)");
  }
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < config.size(); ++i) {
    if (i != ei) keep.push_back(i);
  }
  CurveConfig out;
  std::size_t meeting = 0;
  bool multiple = false;
  for (std::size_t i : keep) {
    CurveRecord c = config.curve(i);
    const long m = config.meet(i, ei);
    c.self_int += m * m;
    c.k_dot -= m;
    c.genus += m * (m - 1) / 2;
    if (m > 0) ++meeting;
    if (m > 1) multiple = true;
    out.add_curve(std::move(c));
  }
  for (std::size_t a = 0; a < keep.size(); ++a) {
    for (std::size_t b = a + 1; b < keep.size(); ++b) {
      const long n = config.meet(keep[a], keep[b]) + config.meet(keep[a], ei) * config.meet(keep[b], ei);
      if (n != 0) out.set_intersection(a, b, n);
    }
  }
  // The image point of e is a node exactly when at most two curves pass
  // through it, each transversally.
  out.snc_attested = config.snc_attested && !multiple && meeting <= 2;
  for (const auto& p : config.points) {
    if (std::find(p.curves.begin(), p.curves.end(), e) == p.curves.end()) out.points.push_back(p);
  }
  if (!config.points.empty() && meeting == 2 && !multiple) {
    SncPoint p{"pt:" + e, {}};
    for (std::size_t i : keep) {
      if (config.meet(i, ei) > 0) p.curves.push_back(config.curve(i).id);
    }
    out.points.push_back(std::move(p));
  }
  return out;
}

}  // namespace logsurf
