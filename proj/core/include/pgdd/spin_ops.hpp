#pragma once

#include <array>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "pgdd/rotation.hpp"

namespace pgdd {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Dense operator on one spin-j or a tensor product of spins; dims holds the
// per-site dimensions 2j_k + 1.
struct SpinOperator {
  std::vector<int> dims;
  Matrix mat;

  int dim() const { return static_cast<int>(mat.rows()); }
  double spin_of_site(int site) const { return (dims.at(site) - 1) / 2.0; }
  bool is_hermitian(double tol = 1e-12) const;
};

SpinOperator identity_operator(const std::vector<int>& dims);

int spin_dimension(double j);  // 2j+1; throws unless 2j is a nonnegative integer

double hs_norm(const Matrix& m);           // Frobenius norm
double sup_norm(const Matrix& m);          // largest singular value
Complex hs_inner(const Matrix& a, const Matrix& b);  // Tr(a^dagger b)

// Angular momentum matrices in the |j,m> basis ordered m = j..-j.
// Satisfy [Jx,Jy] = i Jz and Jx^2+Jy^2+Jz^2 = j(j+1).
std::array<Matrix, 3> angular_momentum_ops(double j);

// J.n for a unit axis n.
Matrix spin_projection(double j, const Vec3& axis);

// exp(-i theta J.n) computed by eigendecomposition of the Hermitian
// generator, so the result is unitary to machine precision.
Matrix wigner_d(double j, const Rotation& r);

}  // namespace pgdd
