#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace pgdd {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

// Tolerance for identifying two quaternions as the same SO(3) element.
inline constexpr double kSo3Tol = 1e-9;

// Proper 3D rotation stored as a unit quaternion (w, x, y, z).
// q and -q describe the same rotation; all comparisons identify them.
struct Rotation {
  double w = 1.0, x = 0.0, y = 0.0, z = 0.0;

  static Rotation identity() { return {}; }

  double norm() const;
  Rotation normalized() const;
  Rotation inverse() const { return {w, -x, -y, -z}; }

  // Geodesic rotation angle in [0, pi].
  double angle() const;
  // Unit rotation axis (+z for the identity).
  Vec3 axis() const;

  // Sign-fixed representative: first component above 1e-10 made positive.
  Rotation canonical() const;

  Vec3 apply(const Vec3& v) const;

  bool is_identity(double tol = kSo3Tol) const;
};

// axis need not be normalized; throws std::invalid_argument on a zero axis.
Rotation rotation_from_axis_angle(const Vec3& axis, double angle);

// Quaternion product: r2 acts first, r1 second.
Rotation compose(const Rotation& r1, const Rotation& r2);

// min(|q1 - q2|, |q1 + q2|) < tol, i.e. equality as SO(3) elements.
bool so3_equal(const Rotation& r1, const Rotation& r2, double tol = kSo3Tol);

// 3x3 orthogonal matrix with determinant +1; a homomorphism of compose().
Mat3 rotation_matrix(const Rotation& r);

}  // namespace pgdd
