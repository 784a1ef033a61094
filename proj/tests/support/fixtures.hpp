#pragma once

#include <random>
#include <string>
#include <vector>

#include "logsurf/discrepancy.hpp"
#include "logsurf/toric.hpp"

namespace fixtures {

using logsurf::Divisor;
using logsurf::Ray;
using logsurf::SingularModel;

struct Pair {
  std::string name;
  SingularModel model;
  Divisor delta;
};

/// Blow-up of the plane at the common point of three lines, E contracted,
/// Delta = L1 + L2 + L3.
Pair concurrent_lines();
/// Ruled surface over an elliptic curve with its (-1)-section E contracted.
Pair elliptic_cone();
/// F2 with the (-2)-section E contracted and two sections D1, D2 ~ E + 4f
/// meeting E twice; Delta = D1 + D2.
Pair toric_a1_with_sections();
/// E (-2) contracted, L (-1) meeting it once.
Pair a1_point();
/// E1, E2 (-2) chain contracted, L (-1) meeting E1 once.
Pair a2_point();
/// Smooth plane from its fan, Delta = 0.
Pair plane();

/// All of the above.
std::vector<Pair> all_pairs();

/// Adds a curve with genus and self-intersection; k_dot from adjunction.
void add(SingularModel& m, const std::string& id, long self_int, long genus = 0);

/// Complete fans with rays among the primitive vectors of [-bound, bound]^2,
/// between 3 and max_rays rays, one per orbit of the symmetries of the square.
std::vector<std::vector<Ray>> enumerate_fans(long bound, std::size_t max_rays);

/// Negative-definite configuration of up to `max_contracted` contracted
/// genus-0 curves with self-intersection in [-5, -2] (so k_dot >= 0), plus
/// one to three surviving curves meeting them; Delta on the surviving curves
/// with coefficients in [0, 1].
Pair random_minimal_resolution(std::mt19937& rng, std::size_t max_contracted = 5);

/// Connected negative-definite configuration of 1..max_curves contracted
/// curves (genus 0 or 1, self-intersection in [-4, -1]).
SingularModel random_component(std::mt19937& rng, std::size_t max_curves = 4);

/// Random rational in [0, 1] with denominator at most 6.
logsurf::Rational random_unit(std::mt19937& rng);

}  // namespace fixtures
