#include "pgdd/spin_ops.hpp"

#include <cmath>
#include <stdexcept>

namespace pgdd {

bool SpinOperator::is_hermitian(double tol) const {
  return (mat - mat.adjoint()).cwiseAbs().maxCoeff() < tol;
}

SpinOperator identity_operator(const std::vector<int>& dims) {
  int d = 1;
  for (int x : dims) d *= x;
  return {dims, Matrix::Identity(d, d)};
}

int spin_dimension(double j) {
  const double t = 2.0 * j;
  const double r = std::round(t);
  if (j < 0 || std::abs(t - r) > 1e-9)
    throw std::invalid_argument("spin j must be a nonnegative half-integer");
  return static_cast<int>(r) + 1;
}

double hs_norm(const Matrix& m) { return m.norm(); }

double sup_norm(const Matrix& m) {
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() < 1e-12 * (1.0 + m.cwiseAbs().maxCoeff())) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().maxCoeff();
  }
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

Complex hs_inner(const Matrix& a, const Matrix& b) { return (a.adjoint() * b).trace(); }

std::array<Matrix, 3> angular_momentum_ops(double j) {
  const int d = spin_dimension(j);
  Matrix jz = Matrix::Zero(d, d);
  Matrix jp = Matrix::Zero(d, d);  // raising operator J+
  for (int i = 0; i < d; ++i) {
    const double m = j - i;
    jz(i, i) = m;
    if (i > 0) jp(i - 1, i) = std::sqrt(j * (j + 1) - m * (m + 1));
  }
  const Matrix jm = jp.adjoint();
  const Complex img(0, 1);
  return {0.5 * (jp + jm), -0.5 * img * (jp - jm), jz};
}

Matrix spin_projection(double j, const Vec3& axis) {
  const Vec3 n = axis.normalized();
  const auto ops = angular_momentum_ops(j);
  return n.x() * ops[0] + n.y() * ops[1] + n.z() * ops[2];
}

Matrix wigner_d(double j, const Rotation& r) {
  const int d = spin_dimension(j);
  const double theta = 2.0 * std::atan2(std::sqrt(r.x * r.x + r.y * r.y + r.z * r.z), r.w);
  if (theta < 1e-300) return Matrix::Identity(d, d);
  Vec3 n(r.x, r.y, r.z);
  n.normalize();
  Eigen::SelfAdjointEigenSolver<Matrix> es(spin_projection(j, n));
  const Complex img(0, 1);
  Vector phases(d);
  for (int i = 0; i < d; ++i) phases(i) = std::exp(-img * theta * es.eigenvalues()(i));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace pgdd
