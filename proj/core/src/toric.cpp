#include "logsurf/toric.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "logsurf/errors.hpp"
#include "logsurf/linalg.hpp"

namespace logsurf {

namespace {

std::string ray_str(const Ray& r) { return "(" + std::to_string(r[0]) + "," + std::to_string(r[1]) + ")"; }

int half_plane(const Ray& r) { return (r[1] < 0 || (r[1] == 0 && r[0] < 0)) ? 1 : 0; }

bool angle_less(const Ray& a, const Ray& b) {
  const int ha = half_plane(a);
  const int hb = half_plane(b);
  if (ha != hb) return ha < hb;
  return det(a, b) > 0;
}

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long ceil_div(long a, long b) { return -floor_div(-a, b); }

// Returns (s, t) with x s + y t = 1 for a primitive (x, y).
std::pair<long, long> bezout(long x, long y) {
  long old_r = x, r = y, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const long q = floor_div(old_r, r);
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
    old_t -= q * t;
    std::swap(old_t, t);
  }
  if (old_r < 0) {
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_s, old_t};
}

}  // namespace

Fan2D Fan2D::from_rays(std::vector<Ray> rays) {
  if (rays.size() < 3) throw Error(ErrorCode::NotComplete, "a complete fan needs at least three rays");
  for (const auto& r : rays) {
    if (std::gcd(r[0], r[1]) != 1) throw Error(ErrorCode::NotPrimitive, "ray " + ray_str(r) + " is not primitive");
  }
  const Ray first = rays.front();
  std::sort(rays.begin(), rays.end(), angle_less);
  std::rotate(rays.begin(), std::find(rays.begin(), rays.end(), first), rays.end());
  Fan2D fan;
  fan.rays_ = std::move(rays);
  for (std::size_t i = 0; i < fan.size(); ++i) {
    if (fan.cone_index(i) <= 0) {
      throw Error(ErrorCode::NotComplete, "rays " + ray_str(fan.ray(i)) + " and " + ray_str(fan.ray(i + 1)) +
                                              " do not span a strictly convex cone");
    }
  }
  return fan;
}

bool Fan2D::is_smooth() const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (cone_index(i) != 1) return false;
  }
  return true;
}

std::vector<Ray> hirzebruch_jung_rays(const Ray& v, const Ray& w) {
  std::vector<Ray> out;
  Ray cur = v;
  while (det(cur, w) > 1) {
    const long d = det(cur, w);
    const auto [s0, t0] = bezout(cur[0], cur[1]);
    const Ray complement{-t0, s0};  // det(cur, complement) = 1
    const long alpha = det(w, complement);
    const long s = ceil_div(alpha, d);
    const Ray next{complement[0] + s * cur[0], complement[1] + s * cur[1]};
    out.push_back(next);
    cur = next;
  }
  return out;
}

std::vector<long> hirzebruch_jung_fraction(long n, long q) {
  if (n <= 0 || q <= 0 || q >= n || std::gcd(n, q) != 1) {
    throw Error(ErrorCode::InvalidCurveData, "need 0 < q < n coprime");
  }
  std::vector<long> b;
  while (q > 0) {
    const long bi = ceil_div(n, q);
    b.push_back(bi);
    const long r = bi * q - n;
    n = q;
    q = r;
  }
  return b;
}

ToricSurface config_from_fan(const Fan2D& fan) {
  struct Slot {
    Ray ray;
    std::string id;
    bool inserted;
  };
  std::vector<Slot> slots;
  for (std::size_t i = 0; i < fan.size(); ++i) {
    slots.push_back({fan.ray(i), "T" + std::to_string(i), false});
    std::size_t j = 1;
    for (const auto& r : hirzebruch_jung_rays(fan.ray(i), fan.ray(i + 1))) {
      slots.push_back({r, "E" + std::to_string(i) + "_" + std::to_string(j++), true});
    }
  }
  const std::size_t n = slots.size();
  ToricSurface ts{.model = {}, .fan = fan, .smooth_fan = fan, .universe = {}, .canonical_X = {}, .canonical_Y = {}, .boundary = {}};
  std::vector<Ray> smooth_rays;
  for (const auto& s : slots) smooth_rays.push_back(s.ray);
  ts.smooth_fan = Fan2D::from_rays(smooth_rays);

  CurveConfig& cfg = ts.model.config;
  for (std::size_t i = 0; i < n; ++i) {
    const Ray& prev = slots[(i + n - 1) % n].ray;
    const Ray& next = slots[(i + 1) % n].ray;
    // prev + next = b * v_i with b = det(prev, next); the self-intersection is -b.
    const long self = -det(prev, next);
    cfg.add_curve({.id = slots[i].id, .self_int = self, .genus = 0, .k_dot = -2 - self, .toric_ray = slots[i].ray});
  }
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    cfg.set_intersection(i, j, 1);
    cfg.points.push_back({"p" + std::to_string(i), {slots[i].id, slots[j].id}});
  }
  cfg.snc_attested = true;
  for (const auto& s : slots) {
    ts.canonical_Y.set(s.id, Rational(-1));
    if (s.inserted) {
      ts.model.contracted.insert(s.id);
    } else {
      ts.universe.push_back(s.id);
      ts.boundary.set(s.id, Rational(1));
      ts.canonical_X.set(s.id, Rational(-1));
    }
  }
  return ts;
}

std::optional<Fan2D> fan_of(const SingularModel& model) {
  if (!model.is_toric()) return std::nullopt;
  std::vector<Ray> rays;
  for (const auto& id : surviving_curves(model)) rays.push_back(*model.config.curve(id).toric_ray);
  return Fan2D::from_rays(std::move(rays));
}

std::variant<SemiampleWitness, NotNef> nef_semiample_witness(const SingularModel& model, const Divisor& d) {
  if (!model.is_toric()) throw Error(ErrorCode::NotToric, "semi-ample witnesses need a toric model");
  const auto surviving = surviving_curves(model);
  std::map<Ray, std::string> by_ray;
  for (const auto& id : surviving) by_ray.emplace(*model.config.curve(id).toric_ray, id);
  for (const auto& [id, c] : d) {
    if (!model.config.contains(id) || model.is_contracted(id)) {
      throw Error(ErrorCode::NotToric, "'" + id + "' is not a torus-invariant curve of X");
    }
  }
  for (const auto& id : surviving) {
    const Rational deg = intersect_on_X(model, d, Divisor{{id, Rational(1)}});
    if (deg.sign() < 0) return NotNef{id, deg};
  }

  const Fan2D fan = *fan_of(model);
  auto a = [&](const Ray& r) { return d.coeff(by_ray.at(r)); };
  SemiampleWitness w;
  std::set<std::array<Rational, 2>> seen;
  for (std::size_t i = 0; i < fan.size(); ++i) {
    const Ray& u = fan.ray(i);
    const Ray& v = fan.ray(i + 1);
    const QMatrix m{{Rational(u[0]), Rational(u[1])}, {Rational(v[0]), Rational(v[1])}};
    const QVector sol = solve_linear(m, {-a(u), -a(v)});
    const std::array<Rational, 2> vertex{sol[0], sol[1]};
    // Convexity of the support function: m_sigma lies in every half-plane.
    for (const auto& r : fan.rays()) {
      if (vertex[0] * Rational(r[0]) + vertex[1] * Rational(r[1]) < -a(r)) {
        throw Error(ErrorCode::Internal, "nef by intersection numbers but the support function is not convex");
      }
    }
    if (seen.insert(vertex).second) w.vertices.push_back(vertex);
  }
  mpz_class scale = 1;
  for (const auto& v : w.vertices) {
    for (const auto& x : v) scale = lcm(scale, x.den());
  }
  w.scale = scale.get_si();
  for (const auto& v : w.vertices) {
    w.lattice_vertices.push_back({(v[0] * Rational(w.scale)).to_long(), (v[1] * Rational(w.scale)).to_long()});
  }
  QMatrix diffs(w.vertices.size(), 2);
  for (std::size_t i = 0; i < w.vertices.size(); ++i) {
    diffs(i, 0) = w.vertices[i][0] - w.vertices[0][0];
    diffs(i, 1) = w.vertices[i][1] - w.vertices[0][1];
  }
  w.image_dimension = static_cast<int>(rank(diffs));
  return w;
}

}  // namespace logsurf
