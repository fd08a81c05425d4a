#include "pgdd/rotation.hpp"

#include <cmath>
#include <stdexcept>

namespace pgdd {

double Rotation::norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }

Rotation Rotation::normalized() const {
  const double n = norm();
  if (n == 0.0) throw std::invalid_argument("Rotation: zero quaternion");
  return {w / n, x / n, y / n, z / n};
}

double Rotation::angle() const {
  const double c = std::min(1.0, std::abs(w));
  return 2.0 * std::acos(c);
}

Vec3 Rotation::axis() const {
  Vec3 v(x, y, z);
  const double n = v.norm();
  if (n < 1e-14) return Vec3(0, 0, 1);
  // Flip so the axis matches angle() in [0, pi].
  return (w < 0 ? -1.0 : 1.0) * v / n;
}

Rotation Rotation::canonical() const {
  const double c[4] = {w, x, y, z};
  double sign = 1.0;
  for (double v : c) {
    if (std::abs(v) > 1e-10) {
      sign = v > 0 ? 1.0 : -1.0;
      break;
    }
  }
  return {sign * w, sign * x, sign * y, sign * z};
}

bool Rotation::is_identity(double tol) const { return so3_equal(*this, Rotation::identity(), tol); }

Vec3 Rotation::apply(const Vec3& v) const {
  // q v q^-1 with v as a pure quaternion.
  const Vec3 u(x, y, z);
  return v + 2.0 * u.cross(u.cross(v) + w * v);
}

Rotation rotation_from_axis_angle(const Vec3& axis, double angle) {
  const double n = axis.norm();
  if (n < 1e-300) throw std::invalid_argument("rotation_from_axis_angle: zero axis");
  const double h = 0.5 * angle;
  const double s = std::sin(h) / n;
  return Rotation{std::cos(h), s * axis.x(), s * axis.y(), s * axis.z()}.normalized();
}

Rotation compose(const Rotation& r1, const Rotation& r2) {
  Rotation q{
      r1.w * r2.w - r1.x * r2.x - r1.y * r2.y - r1.z * r2.z,
      r1.w * r2.x + r1.x * r2.w + r1.y * r2.z - r1.z * r2.y,
      r1.w * r2.y - r1.x * r2.z + r1.y * r2.w + r1.z * r2.x,
      r1.w * r2.z + r1.x * r2.y - r1.y * r2.x + r1.z * r2.w,
  };
  return q.normalized();
}

bool so3_equal(const Rotation& r1, const Rotation& r2, double tol) {
  const double dm = std::sqrt((r1.w - r2.w) * (r1.w - r2.w) + (r1.x - r2.x) * (r1.x - r2.x) +
                              (r1.y - r2.y) * (r1.y - r2.y) + (r1.z - r2.z) * (r1.z - r2.z));
  const double dp = std::sqrt((r1.w + r2.w) * (r1.w + r2.w) + (r1.x + r2.x) * (r1.x + r2.x) +
                              (r1.y + r2.y) * (r1.y + r2.y) + (r1.z + r2.z) * (r1.z + r2.z));
  return std::min(dm, dp) < tol;
}

Mat3 rotation_matrix(const Rotation& r) {
  Mat3 m;
  const double w = r.w, x = r.x, y = r.y, z = r.z;
  m << 1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y),
      2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
      2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y);
  return m;
}

}  // namespace pgdd
