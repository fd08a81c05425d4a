#include <doctest.h>

#include <cmath>
#include <numbers>

#include "pgdd/point_group.hpp"
#include "pgdd/random_hamiltonian.hpp"
#include "pgdd/rotation.hpp"

using namespace pgdd;

namespace {
constexpr double kPi = std::numbers::pi;

Rotation random_rotation(Rng& rng) {
  Rotation q{rng.normal(), rng.normal(), rng.normal(), rng.normal()};
  return q.normalized();
}
}  // namespace

TEST_CASE("axis-angle construction") {
  CHECK(rotation_from_axis_angle({0, 0, 1}, 0.0).is_identity());

  const Rotation c2 = rotation_from_axis_angle({0, 0, 1}, kPi);
  CHECK(compose(c2, c2).is_identity());

  const Rotation a = rotation_from_axis_angle({0, 0, 1}, 2 * kPi / 3);
  CHECK_FALSE(a.is_identity());
  CHECK_FALSE(compose(a, a).is_identity());
  CHECK(compose(a, compose(a, a)).is_identity());

  CHECK_THROWS_AS(rotation_from_axis_angle({0, 0, 0}, 1.0), std::invalid_argument);
}

TEST_CASE("compose identities and inverses") {
  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    const Rotation r = random_rotation(rng);
    CHECK(so3_equal(compose(Rotation::identity(), r), r));
    CHECK(compose(r, r.inverse()).is_identity());
  }
}

TEST_CASE("tetrahedral generators satisfy (ab)^2 = E") {
  const PointGroup t = standard_group("T");
  const Rotation ab = compose(t.generators[0].second, t.generators[1].second);
  CHECK(compose(ab, ab).is_identity());
}

TEST_CASE("rotation matrices") {
  CHECK((rotation_matrix(Rotation::identity()) - Mat3::Identity()).norm() < 1e-14);

  const Mat3 rz = rotation_matrix(rotation_from_axis_angle({0, 0, 1}, kPi / 2));
  CHECK((rz * Vec3(1, 0, 0) - Vec3(0, 1, 0)).norm() < 1e-12);
  CHECK((rz * Vec3(0, 1, 0) - Vec3(-1, 0, 0)).norm() < 1e-12);

  // C3 about the body diagonal permutes the coordinate axes cyclically.
  const Mat3 c3 = rotation_matrix(rotation_from_axis_angle(Vec3(1, 1, 1), 2 * kPi / 3));
  CHECK((c3 * Vec3(1, 0, 0) - Vec3(0, 1, 0)).norm() < 1e-12);
  CHECK((c3 * Vec3(0, 1, 0) - Vec3(0, 0, 1)).norm() < 1e-12);
  CHECK((c3 * Vec3(0, 0, 1) - Vec3(1, 0, 0)).norm() < 1e-12);
}

TEST_CASE("rotation_matrix is a homomorphism with det +1") {
  Rng rng(11);
  for (int i = 0; i < 1000; ++i) {
    const Rotation r1 = random_rotation(rng), r2 = random_rotation(rng);
    const Mat3 lhs = rotation_matrix(compose(r1, r2));
    const Mat3 rhs = rotation_matrix(r1) * rotation_matrix(r2);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-10);
  }
  for (int i = 0; i < 20; ++i) {
    const Mat3 m = rotation_matrix(random_rotation(rng));
    CHECK(std::abs(m.determinant() - 1.0) < 1e-12);
    CHECK((m * m.transpose() - Mat3::Identity()).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("standard group orders") {
  CHECK(standard_group("D2").order() == 4);
  CHECK(standard_group("T").order() == 12);
  CHECK(standard_group("O").order() == 24);
  CHECK(standard_group("I").order() == 60);
  CHECK_THROWS_AS(standard_group("K"), std::invalid_argument);
}

TEST_CASE("D2 is {E, pi_x, pi_y, pi_z}") {
  const PointGroup d2 = standard_group("D2");
  REQUIRE(d2.order() == 4);
  CHECK(contains(d2, Rotation::identity()));
  CHECK(contains(d2, rotation_from_axis_angle({1, 0, 0}, kPi)));
  CHECK(contains(d2, rotation_from_axis_angle({0, 1, 0}, kPi)));
  CHECK(contains(d2, rotation_from_axis_angle({0, 0, 1}, kPi)));
}

TEST_CASE("conjugacy class sizes by rotation angle") {
  auto census_counts = [](const std::string& name) {
    std::vector<int> counts;
    for (const auto& [angle, count] : angle_census(standard_group(name))) counts.push_back(count);
    return counts;
  };
  CHECK(census_counts("T") == std::vector<int>{1, 8, 3});
  CHECK(census_counts("O") == std::vector<int>{1, 6, 8, 9});    // E, C4, C3, C2 by angle
  CHECK(census_counts("I") == std::vector<int>{1, 12, 20, 12, 15});  // E, C5, C3, C5^2, C2
}

TEST_CASE("membership checks") {
  const PointGroup t = standard_group("T");
  CHECK(contains(t, rotation_from_axis_angle({0, 0, 1}, 2 * kPi / 3)));
  CHECK_FALSE(contains(t, rotation_from_axis_angle({0, 0, 1}, kPi / 2)));
  CHECK(contains(t, Rotation::identity()));
}

TEST_CASE("closure is independent of generator order") {
  const PointGroup t = standard_group("T");
  std::vector<std::pair<std::string, Rotation>> reversed = {t.generators[1], t.generators[0]};
  const PointGroup t2 = generate_group(reversed);
  REQUIRE(t2.order() == t.order());
  for (const auto& e : t.elements) CHECK(contains(t2, e));
}

TEST_CASE("single pi generator gives C2") {
  const PointGroup c2 = generate_group({{"a", rotation_from_axis_angle({0, 0, 1}, kPi)}});
  CHECK(c2.order() == 2);
}

TEST_CASE("non-closing generators are rejected") {
  // An irrational angle about z never closes.
  CHECK_THROWS_AS(generate_group({{"a", rotation_from_axis_angle({0, 0, 1}, 1.0)}}),
                  std::runtime_error);
}

TEST_CASE("cyclic and dihedral helper groups") {
  CHECK(cyclic_group(5, {0, 0, 1}).order() == 5);
  CHECK(dihedral_group(6, {0, 0, 1}, {1, 0, 0}).order() == 12);
}
