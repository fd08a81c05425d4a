#pragma once

#include <string>
#include <vector>

#include "pgdd/multipole.hpp"
#include "pgdd/point_group.hpp"
#include "pgdd/spin_ops.hpp"

namespace pgdd {

// Stars on the unit sphere, with multiplicity, encoding a spin state or a
// multipole spinor.
struct Constellation {
  std::vector<Vec3> stars;
};

// Roots of the Majorana polynomial of a spin-j pure state (coefficients in
// the m = j..-j basis), stereographically projected from the south pole;
// roots at infinity map to the south pole.  2j stars in total.
Constellation majorana_roots(const Vector& state);

struct MultipoleConstellation {
  int L = 0;
  double norm = 0.0;  // Euclidean norm of the rank-L multipole vector
  Constellation constellation;
};

// Per-L constellations of the operator's multipole spinors (skipping ranks
// with negligible norm).  For Hermitian H the stars come in antipodal pairs.
std::vector<MultipoleConstellation> operator_multipole_constellations(const Matrix& H, double j);

struct SymmetryAxis {
  int fold = 0;  // 2..12, or 0 for a continuous axis
  Vec3 axis = Vec3(0, 0, 1);
};

struct PointGroupReport {
  std::string name;  // SO(3), C-inf, D-inf, C2..C12, D2..D12, T, O, I, C1
  bool is_identity_multiple = false;
  bool is_axially_continuous = false;
  std::vector<SymmetryAxis> axes;
  // The detected finite symmetry group in its detected orientation (empty
  // elements for SO(3)/continuous-only reports).
  PointGroup group;
};

// Largest rotation group leaving the (HS-normalized) operator invariant,
// found by direct conjugation tests over candidate axes derived from the
// multipole constellations.  Invariance tolerance 1e-9.
PointGroupReport detect_point_group(const Matrix& H, double j);

}  // namespace pgdd
