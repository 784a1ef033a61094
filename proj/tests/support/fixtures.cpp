#include "fixtures.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "logsurf/linalg.hpp"

namespace fixtures {

using logsurf::CurveRecord;
using logsurf::Rational;

void add(SingularModel& m, const std::string& id, long self_int, long genus) {
  m.config.add_curve(CurveRecord{id, self_int, genus, 2 * genus - 2 - self_int, true, std::nullopt});
}

Pair concurrent_lines() {
  Pair p{"concurrent_lines", {}, {}};
  add(p.model, "E", -1);
  for (int i = 1; i <= 3; ++i) {
    const std::string l = "L" + std::to_string(i);
    add(p.model, l, 0);
    p.model.config.set_intersection("E", l, 1);
    p.model.config.points.push_back({"p" + std::to_string(i), {"E", l}});
    p.delta.set(l, Rational(1));
  }
  p.model.config.snc_attested = true;
  p.model.contracted = {"E"};
  return p;
}

Pair elliptic_cone() {
  Pair p{"elliptic_cone", {}, {}};
  add(p.model, "E", -1, 1);
  add(p.model, "F", 0);
  add(p.model, "Einf", 1, 1);
  p.model.config.set_intersection("E", "F", 1);
  p.model.config.set_intersection("F", "Einf", 1);
  p.model.config.snc_attested = true;
  p.model.config.points = {{"p", {"E", "F"}}, {"q", {"F", "Einf"}}};
  p.model.contracted = {"E"};
  return p;
}

Pair toric_a1_with_sections() {
  Pair p{"toric_a1", {}, {}};
  auto& c = p.model.config;
  add(p.model, "E", -2);
  add(p.model, "S", 2);
  add(p.model, "F0", 0);
  add(p.model, "F1", 0);
  c.set_intersection("E", "F0", 1);
  c.set_intersection("E", "F1", 1);
  c.set_intersection("S", "F0", 1);
  c.set_intersection("S", "F1", 1);
  for (const std::string d : {"D1", "D2"}) {
    add(p.model, d, 6);
    c.set_intersection(d, "E", 2);
    c.set_intersection(d, "S", 4);
    c.set_intersection(d, "F0", 1);
    c.set_intersection(d, "F1", 1);
    p.delta.set(d, Rational(1));
  }
  c.set_intersection("D1", "D2", 6);
  p.model.contracted = {"E"};
  return p;
}

Pair a1_point() {
  Pair p{"a1_point", {}, {}};
  add(p.model, "E", -2);
  add(p.model, "L", -1);
  p.model.config.set_intersection("E", "L", 1);
  p.model.config.snc_attested = true;
  p.model.contracted = {"E"};
  return p;
}

Pair a2_point() {
  Pair p{"a2_point", {}, {}};
  add(p.model, "E1", -2);
  add(p.model, "E2", -2);
  add(p.model, "L", -1);
  p.model.config.set_intersection("E1", "E2", 1);
  p.model.config.set_intersection("E1", "L", 1);
  p.model.config.snc_attested = true;
  p.model.contracted = {"E1", "E2"};
  return p;
}

Pair plane() {
  const auto ts = logsurf::config_from_fan(logsurf::Fan2D::from_rays({{1, 0}, {0, 1}, {-1, -1}}));
  return {"plane", ts.model, {}};
}

std::vector<Pair> all_pairs() {
  return {concurrent_lines(), elliptic_cone(), toric_a1_with_sections(), a1_point(), a2_point(), plane()};
}

namespace {

using Transform = std::array<long, 4>;  // row-major 2x2

constexpr std::array<Transform, 8> kSquareSymmetries{{
    {1, 0, 0, 1}, {0, -1, 1, 0}, {-1, 0, 0, -1}, {0, 1, -1, 0},
    {1, 0, 0, -1}, {-1, 0, 0, 1}, {0, 1, 1, 0}, {0, -1, -1, 0},
}};

std::vector<Ray> canonical(const std::vector<Ray>& rays) {
  std::vector<Ray> best;
  for (const auto& t : kSquareSymmetries) {
    std::vector<Ray> image;
    for (const auto& r : rays) image.push_back({t[0] * r[0] + t[1] * r[1], t[2] * r[0] + t[3] * r[1]});
    std::sort(image.begin(), image.end());
    if (best.empty() || image < best) best = image;
  }
  return best;
}

int half(const Ray& r) { return (r[1] > 0 || (r[1] == 0 && r[0] > 0)) ? 0 : 1; }

bool complete(std::vector<Ray> rays) {
  std::sort(rays.begin(), rays.end(), [](const Ray& a, const Ray& b) {
    if (half(a) != half(b)) return half(a) < half(b);
    return logsurf::det(a, b) > 0;
  });
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (logsurf::det(rays[i], rays[(i + 1) % rays.size()]) <= 0) return false;
  }
  return true;
}

}  // namespace

std::vector<std::vector<Ray>> enumerate_fans(long bound, std::size_t max_rays) {
  std::vector<Ray> prim;
  for (long x = -bound; x <= bound; ++x) {
    for (long y = -bound; y <= bound; ++y) {
      if (std::gcd(x, y) == 1) prim.push_back({x, y});
    }
  }
  std::map<std::vector<Ray>, std::vector<Ray>> seen;
  const std::size_t n = prim.size();
  for (std::size_t k = 3; k <= std::min(max_rays, n); ++k) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
    do {
      std::vector<Ray> rays;
      for (std::size_t i = 0; i < n; ++i) {
        if (pick[i]) rays.push_back(prim[i]);
      }
      if (complete(rays)) seen.emplace(canonical(rays), rays);
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  std::vector<std::vector<Ray>> out;
  for (auto& [key, rays] : seen) out.push_back(std::move(rays));
  return out;
}

Rational random_unit(std::mt19937& rng) {
  const long den = std::uniform_int_distribution<long>(1, 6)(rng);
  return Rational(std::uniform_int_distribution<long>(0, den)(rng), den);
}

namespace {

bool negative_definite(const SingularModel& m, const std::vector<std::string>& ids) {
  std::vector<std::size_t> idx;
  for (const auto& id : ids) idx.push_back(m.config.index(id));
  return logsurf::is_negative_definite(m.config.intersection_matrix(idx));
}

}  // namespace

Pair random_minimal_resolution(std::mt19937& rng, std::size_t max_contracted) {
  std::uniform_int_distribution<long> coin(0, 9);
  for (;;) {
    Pair p{"random_minres", {}, {}};
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_contracted)(rng);
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < n; ++i) {
      ids.push_back("E" + std::to_string(i));
      add(p.model, ids.back(), std::uniform_int_distribution<long>(-5, -2)(rng));
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (coin(rng) < 4) p.model.config.set_intersection(ids[i], ids[j], 1);
      }
    }
    if (!negative_definite(p.model, ids)) continue;
    const std::size_t m = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    for (std::size_t j = 0; j < m; ++j) {
      const std::string b = "B" + std::to_string(j);
      add(p.model, b, std::uniform_int_distribution<long>(-1, 3)(rng));
      for (const auto& e : ids) p.model.config.set_intersection(b, e, std::uniform_int_distribution<long>(0, 2)(rng));
      p.delta.set(b, random_unit(rng));
    }
    p.model.contracted = {ids.begin(), ids.end()};
    return p;
  }
}

SingularModel random_component(std::mt19937& rng, std::size_t max_curves) {
  for (;;) {
    SingularModel m;
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_curves)(rng);
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < n; ++i) {
      ids.push_back("C" + std::to_string(i));
      const long genus = std::uniform_int_distribution<long>(0, 4)(rng) == 0 ? 1 : 0;
      add(m, ids.back(), std::uniform_int_distribution<long>(-4, -1)(rng), genus);
    }
    // A random spanning tree keeps the component connected; extra edges and
    // multiplicities on top.
    for (std::size_t i = 1; i < n; ++i) {
      const std::size_t parent = std::uniform_int_distribution<std::size_t>(0, i - 1)(rng);
      m.config.set_intersection(ids[i], ids[parent], std::uniform_int_distribution<long>(1, 2)(rng));
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (m.config.meet(i, j) == 0 && std::uniform_int_distribution<int>(0, 5)(rng) == 0) {
          m.config.set_intersection(ids[i], ids[j], 1);
        }
      }
    }
    if (!negative_definite(m, ids)) continue;
    m.contracted = {ids.begin(), ids.end()};
    return m;
  }
}

}  // namespace fixtures
