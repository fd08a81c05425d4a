#include <doctest.h>

#include <cmath>

#include "pgdd/multipole.hpp"
#include "pgdd/random_hamiltonian.hpp"

using namespace pgdd;

namespace {
Rotation random_rotation(Rng& rng) {
  Rotation q{rng.normal(), rng.normal(), rng.normal(), rng.normal()};
  return q.normalized();
}

Matrix random_hermitian(Rng& rng, int d) { return random_gue(rng, d, 1.0); }
}  // namespace

TEST_CASE("lowest multipoles") {
  for (double j : {0.5, 1.0, 2.5}) {
    const int d = spin_dimension(j);
    const Matrix t00 = multipole_operator(j, 0, 0);
    CHECK((t00 - Matrix::Identity(d, d) / std::sqrt(double(d))).cwiseAbs().maxCoeff() < 1e-13);

    // T_10 is a positive multiple of Jz.
    const Matrix t10 = multipole_operator(j, 1, 0);
    const Matrix jz = angular_momentum_ops(j)[2];
    const Complex ratio = t10(0, 0) / jz(0, 0);
    CHECK(ratio.real() > 0);
    CHECK(std::abs(ratio.imag()) < 1e-13);
    CHECK((t10 - ratio * jz).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("orthonormality and hermiticity") {
  for (double j : {0.5, 1.0, 1.5, 2.0}) {
    const int d = spin_dimension(j);
    for (int L = 0; L <= d - 1; ++L)
      for (int M = -L; M <= L; ++M) {
        const Matrix& t = multipole_operator(j, L, M);
        const double sign = (M % 2 == 0) ? 1.0 : -1.0;
        CHECK((t.adjoint() - sign * multipole_operator(j, L, -M)).cwiseAbs().maxCoeff() < 1e-12);
        for (int Lp = 0; Lp <= d - 1; ++Lp)
          for (int Mp = -Lp; Mp <= Lp; ++Mp) {
            const Complex inner = hs_inner(t, multipole_operator(j, Lp, Mp));
            const double expected = (L == Lp && M == Mp) ? 1.0 : 0.0;
            CHECK(std::abs(inner - expected) < 1e-12);
          }
      }
  }
  CHECK_THROWS_AS(multipole_operator(1.0, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(multipole_operator(1.0, 2, 3), std::invalid_argument);
}

TEST_CASE("decomposition fixed points") {
  // Identity: only h_00.
  const auto comps_id = multipole_decompose(Matrix::Identity(4, 4), 1.5);
  CHECK(std::abs(comps_id[0].components(0) - 2.0) < 1e-13);  // sqrt(d)
  for (std::size_t L = 1; L < comps_id.size(); ++L) CHECK(comps_id[L].norm() < 1e-13);

  // Jz at j = 1/2: h_10 = sqrt(1/2).
  const Matrix jz = angular_momentum_ops(0.5)[2];
  const auto comps_jz = multipole_decompose(jz, 0.5);
  CHECK(std::abs(comps_jz[0].norm()) < 1e-14);
  CHECK(std::abs(comps_jz[1].components(1) - std::sqrt(0.5)) < 1e-13);
  CHECK(std::abs(comps_jz[1].components(0)) < 1e-14);
  CHECK(std::abs(comps_jz[1].components(2)) < 1e-14);
}

TEST_CASE("round trip and hermiticity constraint") {
  Rng rng(5);
  for (double j : {0.5, 1.5, 3.0}) {
    const int d = spin_dimension(j);
    const Matrix h = random_hermitian(rng, d);
    const auto comps = multipole_decompose(h, j);
    CHECK((multipole_reconstruct(comps, j) - h).cwiseAbs().maxCoeff() < 1e-12);
    for (const auto& v : comps)
      for (int M = -v.L; M <= v.L; ++M) {
        const Complex lhs = std::conj(v.components(v.L - M));
        const Complex rhs = (M % 2 == 0 ? 1.0 : -1.0) * v.components(v.L + M);
        CHECK(std::abs(lhs - rhs) < 1e-10);
      }
  }
  CHECK_THROWS_AS(multipole_decompose(Matrix::Identity(3, 3), 0.5), std::invalid_argument);
}

TEST_CASE("wigner-d conjugation covariance") {
  Rng rng(17);
  const std::vector<double> spins = {0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5};
  for (int trial = 0; trial < 500; ++trial) {
    const double j = spins[rng.next_u64() % spins.size()];
    const int d = spin_dimension(j);
    const int L = 1 + static_cast<int>(rng.next_u64() % static_cast<unsigned>(d - 1));
    const int M = -L + static_cast<int>(rng.next_u64() % static_cast<unsigned>(2 * L + 1));
    const Rotation r = random_rotation(rng);

    const Matrix u = wigner_d(j, r);
    const Matrix lhs = u * multipole_operator(j, L, M) * u.adjoint();
    const Matrix dl = wigner_d_rank(L, r);
    Matrix rhs = Matrix::Zero(d, d);
    for (int Mp = L; Mp >= -L; --Mp) rhs += dl(L - Mp, L - M) * multipole_operator(j, L, Mp);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("conjugation is insensitive to the SU(2) lift sign") {
  Rng rng(23);
  const Rotation r = random_rotation(rng);
  // r and its 2pi-shifted lift give opposite-sign wigner_d at half-integer j
  // but identical conjugation maps.
  const Rotation r_flip{-r.w, -r.x, -r.y, -r.z};
  const Matrix u1 = wigner_d(1.5, r), u2 = wigner_d(1.5, r_flip);
  CHECK((u1 + u2).cwiseAbs().maxCoeff() < 1e-10);  // opposite lifts
  const Matrix h = random_gue(rng, 4, 1.0);
  CHECK((u1 * h * u1.adjoint() - u2 * h * u2.adjoint()).cwiseAbs().maxCoeff() < 1e-11);
}
