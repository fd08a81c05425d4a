#include <doctest.h>

#include <cmath>
#include <numbers>

#include "pgdd/clebsch_gordan.hpp"
#include "pgdd/random_hamiltonian.hpp"
#include "pgdd/spin_ops.hpp"

using namespace pgdd;

namespace {
constexpr double kPi = std::numbers::pi;
const Complex kI(0, 1);

Rotation random_rotation(Rng& rng) {
  Rotation q{rng.normal(), rng.normal(), rng.normal(), rng.normal()};
  return q.normalized();
}

// Independent CG oracle: diagonalize J^2 on the coupled space and fix the
// Condon-Shortley signs by a J- ladder from each stretched state.
Eigen::MatrixXd cg_table_oracle(double j1, double j2) {
  const int d1 = spin_dimension(j1), d2 = spin_dimension(j2);
  const int d = d1 * d2;
  auto ops1 = angular_momentum_ops(j1);
  auto ops2 = angular_momentum_ops(j2);
  auto embed = [&](const Matrix& a, const Matrix& b) {
    Matrix out(d, d);
    for (int i = 0; i < d1; ++i)
      for (int k = 0; k < d1; ++k) out.block(i * d2, k * d2, d2, d2) = a(i, k) * b;
    return out;
  };
  const Matrix id1 = Matrix::Identity(d1, d1), id2 = Matrix::Identity(d2, d2);
  std::array<Matrix, 3> jt;
  for (int a = 0; a < 3; ++a) jt[a] = embed(ops1[a], id2) + embed(id1, ops2[a]);
  const Matrix jminus = jt[0] - kI * jt[1];

  // Columns laid out in J-descending blocks, M = J..-J inside each block.
  // Build each |J,J> in the M = J sector orthogonal to the already-built
  // |J',J> (J' > J), fix the Condon-Shortley sign, then ladder down.
  Eigen::MatrixXd table = Eigen::MatrixXd::Zero(d, d);
  int col = 0;
  for (double J = j1 + j2; J >= std::abs(j1 - j2) - 1e-9; J -= 1.0) {
    std::vector<Vector> built;  // |J', M=J> for J' > J
    int block_start = 0;
    for (double Jp = j1 + j2; Jp > J + 1e-9; Jp -= 1.0) {
      const int column = block_start + static_cast<int>(std::llround(Jp - J));
      Vector u = Vector::Zero(d);
      for (int r = 0; r < d; ++r) u(r) = table(r, column);
      built.push_back(u);
      block_start += spin_dimension(Jp);
    }

    Vector v = Vector::Zero(d);
    for (int i1 = 0; i1 < d1 && v.norm() < 1e-6; ++i1) {
      for (int i2 = 0; i2 < d2; ++i2) {
        if (std::abs((j1 - i1) + (j2 - i2) - J) > 1e-9) continue;
        v = Vector::Zero(d);
        v(i1 * d2 + i2) = 1.0;
        for (const auto& u : built) v -= (u.adjoint() * v)(0) * u;
        if (v.norm() > 1e-6) break;
      }
    }
    v.normalize();
    // Condon-Shortley: <j1 j1, j2 J-j1 | J J> > 0.
    const int anchor_i2 = static_cast<int>(std::llround(j2 - (J - j1)));
    if (anchor_i2 >= 0 && anchor_i2 < d2 && v(anchor_i2).real() < 0) v = -v;

    Vector cur = v;
    for (double M = J;; M -= 1.0) {
      for (int r = 0; r < d; ++r) table(r, col) = cur(r).real();
      ++col;
      if (M <= -J + 1e-9) break;
      cur = (jminus * cur).eval();
      cur /= std::sqrt(J * (J + 1) - M * (M - 1));
    }
  }
  return table;
}
}  // namespace

TEST_CASE("angular momentum basics") {
  const auto half = angular_momentum_ops(0.5);
  CHECK(std::abs(half[2](0, 0).real() - 0.5) < 1e-14);
  CHECK(std::abs(half[2](1, 1).real() + 0.5) < 1e-14);

  const auto one = angular_momentum_ops(1.0);
  CHECK(std::abs((one[2] * one[2]).trace().real() - 2.0) < 1e-12);

  for (double j : {0.5, 1.0, 1.5, 2.0, 3.5}) {
    const auto ops = angular_momentum_ops(j);
    // [Jx, Jy] = i Jz
    const Matrix comm = ops[0] * ops[1] - ops[1] * ops[0];
    CHECK((comm - kI * ops[2]).cwiseAbs().maxCoeff() < 1e-12);
    // J^2 = j(j+1)
    const Matrix j2 = ops[0] * ops[0] + ops[1] * ops[1] + ops[2] * ops[2];
    const int d = spin_dimension(j);
    CHECK((j2 - j * (j + 1) * Matrix::Identity(d, d)).cwiseAbs().maxCoeff() < 1e-12);
    // Tr(Ja Jb) = delta_ab j(j+1)(2j+1)/3
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        const double expected = a == b ? j * (j + 1) * (2 * j + 1) / 3.0 : 0.0;
        CHECK(std::abs((ops[a] * ops[b]).trace().real() - expected) < 1e-10);
      }
  }
  CHECK_THROWS_AS(angular_momentum_ops(0.7), std::invalid_argument);
}

TEST_CASE("wigner_d closed forms") {
  CHECK((wigner_d(1.5, Rotation::identity()) - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() <
        1e-14);

  const double theta = 0.7123;
  const Matrix dz = wigner_d(0.5, rotation_from_axis_angle({0, 0, 1}, theta));
  CHECK(std::abs(dz(0, 0) - std::exp(-kI * theta / 2.0)) < 1e-13);
  CHECK(std::abs(dz(1, 1) - std::exp(kI * theta / 2.0)) < 1e-13);
  CHECK(std::abs(dz(0, 1)) < 1e-14);

  // exp(-i pi Jx) at j=1/2 equals -i sigma_x.
  const Matrix dx = wigner_d(0.5, rotation_from_axis_angle({1, 0, 0}, kPi));
  CHECK(std::abs(dx(0, 1) + kI) < 1e-13);
  CHECK(std::abs(dx(1, 0) + kI) < 1e-13);
  CHECK(std::abs(dx(0, 0)) < 1e-14);
}

TEST_CASE("wigner_d unitarity and homomorphism") {
  Rng rng(3);
  for (int i = 0; i < 40; ++i) {
    const Rotation r1 = random_rotation(rng), r2 = random_rotation(rng);
    for (double j : {0.5, 1.0, 2.5}) {
      const int d = spin_dimension(j);
      const Matrix u = wigner_d(j, r1);
      CHECK((u * u.adjoint() - Matrix::Identity(d, d)).cwiseAbs().maxCoeff() < 1e-12);
      const Matrix lhs = wigner_d(j, compose(r1, r2));
      const Matrix rhs = wigner_d(j, r1) * wigner_d(j, r2);
      const double err_plus = (lhs - rhs).cwiseAbs().maxCoeff();
      const double err_minus = (lhs + rhs).cwiseAbs().maxCoeff();
      if (std::abs(2 * j - std::round(2 * j)) < 1e-9 && static_cast<int>(std::round(2 * j)) % 2 == 0)
        CHECK(err_plus < 1e-10);  // integer j: exact homomorphism
      else
        CHECK(std::min(err_plus, err_minus) < 1e-10);  // half-integer: up to sign
    }
  }
}

TEST_CASE("clebsch-gordan fixed values") {
  // C^{00}_{L M, L -M} = (-1)^(L-M)/sqrt(2L+1)
  CHECK(std::abs(clebsch_gordan(1, 1, 1, -1, 0, 0) - 1.0 / std::sqrt(3.0)) < 1e-14);
  CHECK(std::abs(clebsch_gordan(2, 1, 2, -1, 0, 0) + 1.0 / std::sqrt(5.0)) < 1e-14);
  // stretched state
  CHECK(std::abs(clebsch_gordan(0.5, 0.5, 0.5, 0.5, 1, 1) - 1.0) < 1e-14);
  // singlet
  CHECK(std::abs(clebsch_gordan(0.5, 0.5, 0.5, -0.5, 0, 0) - 1.0 / std::sqrt(2.0)) < 1e-14);
  // outside selection rules
  CHECK(clebsch_gordan(0.5, 0.5, 0.5, 0.5, 0, 1) == 0.0);
  CHECK(clebsch_gordan(1, 0, 1, 0, 3, 0) == 0.0);
  CHECK_THROWS_AS(clebsch_gordan(0.3, 0.1, 1, 0, 1, 0), std::invalid_argument);
}

TEST_CASE("clebsch-gordan against ladder-operator oracle") {
  for (const auto& [j1, j2] : std::vector<std::pair<double, double>>{
           {0.5, 0.5}, {1.0, 0.5}, {1.5, 1.0}, {2.0, 2.0}}) {
    const Eigen::MatrixXd table = cg_table_oracle(j1, j2);
    const int d1 = spin_dimension(j1), d2 = spin_dimension(j2);
    int col = 0;
    for (double J = j1 + j2; J >= std::abs(j1 - j2) - 1e-9; J -= 1.0) {
      for (double M = J; M >= -J - 1e-9; M -= 1.0) {
        for (int i1 = 0; i1 < d1; ++i1)
          for (int i2 = 0; i2 < d2; ++i2) {
            const double m1 = j1 - i1, m2 = j2 - i2;
            const double expected = table(i1 * d2 + i2, col);
            CHECK(std::abs(clebsch_gordan(j1, m1, j2, m2, J, M) - expected) < 1e-10);
          }
        ++col;
      }
    }
  }
}
