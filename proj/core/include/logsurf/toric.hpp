#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "logsurf/singular_model.hpp"

namespace logsurf {

using Ray = std::array<long, 2>;

inline long det(const Ray& a, const Ray& b) { return a[0] * b[1] - a[1] * b[0]; }

/// Complete fan in the plane: primitive rays in counterclockwise order with
/// every consecutive pair spanning a strictly convex cone.
class Fan2D {
 public:
  /// Sorts the rays counterclockwise starting from the first one given.
  /// Throws NotPrimitive or NotComplete.
  static Fan2D from_rays(std::vector<Ray> rays);

  const std::vector<Ray>& rays() const { return rays_; }
  std::size_t size() const { return rays_.size(); }
  const Ray& ray(std::size_t i) const { return rays_[i % rays_.size()]; }
  /// det(v_i, v_{i+1}), the index of the i-th two-dimensional cone.
  long cone_index(std::size_t i) const { return det(ray(i), ray(i + 1)); }
  bool is_smooth() const;

  friend bool operator==(const Fan2D&, const Fan2D&) = default;

 private:
  std::vector<Ray> rays_;
};

/// Rays of the minimal resolution of cone(v, w), strictly between v and w in
/// counterclockwise order (empty when det(v, w) = 1).
std::vector<Ray> hirzebruch_jung_rays(const Ray& v, const Ray& w);

/// Hirzebruch-Jung continued fraction n/q = b_1 - 1/(b_2 - ...), with every b_i >= 2.
std::vector<long> hirzebruch_jung_fraction(long n, long q);

struct ToricSurface {
  SingularModel model;
  Fan2D fan;
  Fan2D smooth_fan;
  /// Curves of the original rays; these generate the Mori cone of X.
  std::vector<std::string> universe;
  Divisor canonical_X;  // -sum of original-ray curves
  Divisor canonical_Y;  // -sum of all curves on the resolution
  Divisor boundary;     // sum of original-ray curves
};

/// Curve ids: "T<i>" for the i-th original ray, "E<i>_<j>" for the j-th
/// resolution curve inserted into cone i. Resolution curves are contracted.
ToricSurface config_from_fan(const Fan2D& fan);

/// Fan of X read from the rays of the surviving curves; nullopt unless the
/// model is toric.
std::optional<Fan2D> fan_of(const SingularModel& model);

struct SemiampleWitness {
  /// Vertices m_sigma of the polytope of D, one per maximal cone (deduplicated).
  std::vector<std::array<Rational, 2>> vertices;
  /// scale * vertices: the lattice polytope of the Cartier multiple scale * D.
  std::vector<Ray> lattice_vertices;
  long scale = 1;
  /// Dimension of the image of the associated morphism (0, 1 or 2).
  int image_dimension = 0;
};

struct NotNef {
  std::string curve;
  Rational degree;
};

/// Nef test against every torus-invariant curve of X, and for nef D the
/// polytope data of a basepoint-free multiple. D must be supported on
/// surviving toric curves (NotToric otherwise).
std::variant<SemiampleWitness, NotNef> nef_semiample_witness(const SingularModel& model, const Divisor& d);

}  // namespace logsurf
