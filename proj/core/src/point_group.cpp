#include "pgdd/point_group.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pgdd {

namespace {
constexpr double kPi = std::numbers::pi;
}

int PointGroup::find(const Rotation& r, double tol) const {
  for (int i = 0; i < order(); ++i)
    if (so3_equal(elements[i], r, tol)) return i;
  return -1;
}

PointGroup generate_group(const std::vector<std::pair<std::string, Rotation>>& generators,
                          int max_order, const std::string& name) {
  PointGroup g;
  g.name = name;
  g.generators = generators;
  for (auto& [label, r] : g.generators) r = r.normalized();

  g.elements.push_back(Rotation::identity());
  // Breadth-first closure under left multiplication by each generator.
  for (std::size_t i = 0; i < g.elements.size(); ++i) {
    for (const auto& [label, gen] : g.generators) {
      const Rotation next = compose(gen, g.elements[i]).canonical();
      if (g.find(next) < 0) {
        if (static_cast<int>(g.elements.size()) >= max_order)
          throw std::runtime_error("generate_group: closure exceeds max_order " +
                                   std::to_string(max_order) + " (non-closing generators?)");
        g.elements.push_back(next);
      }
    }
  }
  return g;
}

PointGroup standard_group(const std::string& name) {
  const double phi = (std::sqrt(5.0) + 1.0) / 2.0;
  std::vector<std::pair<std::string, Rotation>> gens;
  if (name == "D2") {
    gens = {{"a", rotation_from_axis_angle({1, 0, 0}, kPi)},
            {"b", rotation_from_axis_angle({0, 1, 0}, kPi)}};
  } else if (name == "T") {
    gens = {{"a", rotation_from_axis_angle({0, 0, 1}, 2 * kPi / 3)},
            {"b", rotation_from_axis_angle({std::sqrt(2.0) / 3.0, std::sqrt(2.0 / 3.0), 1.0 / 3.0},
                                           2 * kPi / 3)}};
  } else if (name == "O") {
    gens = {{"a", rotation_from_axis_angle({0, 0, 1}, kPi / 2)},
            {"b", rotation_from_axis_angle(Vec3(1, 1, 1) / std::sqrt(3.0), 2 * kPi / 3)}};
  } else if (name == "I") {
    gens = {{"a", rotation_from_axis_angle(Vec3(0, -1, phi) / std::sqrt(phi + 2.0), 2 * kPi / 5)},
            {"b", rotation_from_axis_angle(Vec3(1 - phi, 0, phi) / std::sqrt(3.0), 2 * kPi / 3)}};
  } else {
    throw std::invalid_argument("standard_group: unknown group name '" + name + "'");
  }
  return generate_group(gens, kDefaultMaxGroupOrder, name);
}

PointGroup cyclic_group(int n, const Vec3& axis) {
  if (n < 1) throw std::invalid_argument("cyclic_group: n must be >= 1");
  PointGroup g = generate_group({{"a", rotation_from_axis_angle(axis, 2 * kPi / n)}},
                                std::max(2 * n, 4), "C" + std::to_string(n));
  return g;
}

PointGroup dihedral_group(int n, const Vec3& axis, const Vec3& c2_axis) {
  if (n < 1) throw std::invalid_argument("dihedral_group: n must be >= 1");
  if (std::abs(axis.normalized().dot(c2_axis.normalized())) > 1e-9)
    throw std::invalid_argument("dihedral_group: c2_axis must be perpendicular to axis");
  PointGroup g = generate_group({{"a", rotation_from_axis_angle(axis, 2 * kPi / n)},
                                 {"b", rotation_from_axis_angle(c2_axis, kPi)}},
                                std::max(4 * n, 8), "D" + std::to_string(n));
  return g;
}

bool contains(const PointGroup& group, const Rotation& r, double tol) {
  return group.find(r, tol) >= 0;
}

std::map<long long, int> angle_census(const PointGroup& group) {
  std::map<long long, int> census;
  for (const auto& e : group.elements) census[llround(e.angle() * 1e6)]++;
  return census;
}

PointGroup conjugated(const PointGroup& group, const Rotation& r) {
  PointGroup g;
  g.name = group.name;
  const Rotation ri = r.inverse();
  for (const auto& [label, gen] : group.generators)
    g.generators.emplace_back(label, compose(r, compose(gen, ri)));
  for (const auto& e : group.elements) g.elements.push_back(compose(r, compose(e, ri)).canonical());
  return g;
}

}  // namespace pgdd
