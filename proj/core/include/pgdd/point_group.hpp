#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pgdd/rotation.hpp"

namespace pgdd {

// Finite set of proper rotations closed under composition and inverse.
// elements[0] is always the identity; element order is the breadth-first
// discovery order from the generators, which makes Cayley graphs and the
// sequences derived from them reproducible.
struct PointGroup {
  std::string name;
  std::vector<Rotation> elements;
  std::vector<std::pair<std::string, Rotation>> generators;

  int order() const { return static_cast<int>(elements.size()); }
  // Index of r in elements (SO(3) equality), or -1.
  int find(const Rotation& r, double tol = kSo3Tol) const;
};

inline constexpr int kDefaultMaxGroupOrder = 360;

// Breadth-first closure of the generators under composition.  Throws
// std::runtime_error if the closure exceeds max_order (non-closing or
// too-large generator set).
PointGroup generate_group(const std::vector<std::pair<std::string, Rotation>>& generators,
                          int max_order = kDefaultMaxGroupOrder, const std::string& name = "");

// name is one of D2, T, O, I; unknown names throw std::invalid_argument.
PointGroup standard_group(const std::string& name);

// Cyclic group C_n about the given axis.
PointGroup cyclic_group(int n, const Vec3& axis);
// Dihedral group D_n: C_n about axis plus a C2 about c2_axis (perpendicular).
PointGroup dihedral_group(int n, const Vec3& axis, const Vec3& c2_axis);

bool contains(const PointGroup& group, const Rotation& r, double tol = kSo3Tol);

// Element counts keyed by rotation angle rounded to 1e-6 rad.
std::map<long long, int> angle_census(const PointGroup& group);

// The group r G r^-1 (same abstract group, rotated axes).
PointGroup conjugated(const PointGroup& group, const Rotation& r);

}  // namespace pgdd
