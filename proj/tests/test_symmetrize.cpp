#include <doctest.h>

#include <cmath>
#include <numbers>

#include "pgdd/cayley.hpp"
#include "pgdd/random_hamiltonian.hpp"
#include "pgdd/sequence.hpp"
#include "pgdd/symmetrize.hpp"

using namespace pgdd;

namespace {
constexpr double kPi = std::numbers::pi;

// T oriented with its three C2 axes along z and (1,+-1,0)/sqrt(2); the
// rank-3 invariant in this frame is T_32 + T_3-2.
PointGroup t_with_diagonal_c2() {
  const PointGroup t = generate_group({{"a", rotation_from_axis_angle(Vec3(1, 1, 1), 2 * kPi / 3)},
                                       {"b", rotation_from_axis_angle({0, 0, 1}, kPi)}},
                                      kDefaultMaxGroupOrder, "T");
  return conjugated(t, rotation_from_axis_angle({0, 0, 1}, kPi / 4));
}
}  // namespace

TEST_CASE("group average basics") {
  const SpinEnsemble half({0.5});
  const PointGroup d2 = standard_group("D2");

  const Matrix jz = angular_momentum_ops(0.5)[2];
  const auto res = group_average(jz, d2, half);
  CHECK(hs_norm(res.averaged) < 1e-14);
  CHECK(res.is_identity_multiple);

  const auto res_id = group_average(Matrix::Identity(2, 2), d2, half);
  CHECK(res_id.is_identity_multiple);
  CHECK((res_id.averaged - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-14);

  CHECK_THROWS_AS(group_average(Matrix::Identity(3, 3), d2, half), std::invalid_argument);
}

TEST_CASE("octahedral rank-4 invariant is a fixed point") {
  const double j = 2.0;
  const Matrix x = multipole_operator(j, 4, 4) + multipole_operator(j, 4, -4) +
                   std::sqrt(14.0 / 5.0) * multipole_operator(j, 4, 0);
  const auto res = group_average(x, standard_group("O"), SpinEnsemble({j}));
  CHECK((res.averaged - x).cwiseAbs().maxCoeff() < 1e-12);
  CHECK_FALSE(res.is_identity_multiple);
}

TEST_CASE("projector, trace-preserving, unital") {
  Rng rng(9);
  const SpinEnsemble ens({1.5});
  const PointGroup t = standard_group("T");
  for (int i = 0; i < 20; ++i) {
    const Matrix s = random_gue(rng, 4, 1.0);
    const auto once = group_average(s, t, ens);
    const auto twice = group_average(once.averaged, t, ens);
    CHECK((twice.averaged - once.averaged).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(std::abs(once.averaged.trace() - s.trace()) < 1e-12);
  }
  const auto unital = group_average(Matrix::Identity(4, 4), t, ens);
  CHECK((unital.averaged - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("invariant subspaces") {
  // Rotated T: rank-3 invariant is T_32 + T_3-2 up to phase.
  const PointGroup t_rot = t_with_diagonal_c2();
  REQUIRE(t_rot.order() == 12);
  const auto basis = invariant_subspace(t_rot, 1.5, 3);
  REQUIRE(basis.size() == 1);
  const Matrix expected =
      (multipole_operator(1.5, 3, 2) + multipole_operator(1.5, 3, -2)) / std::sqrt(2.0);
  const Complex overlap = hs_inner(basis[0], expected);
  CHECK(std::abs(std::abs(overlap) - 1.0) < 1e-9);

  // Any T orientation has a one-dimensional rank-3 invariant space.
  CHECK(invariant_subspace(standard_group("T"), 1.5, 3).size() == 1);
  CHECK(invariant_subspace(standard_group("T"), 1.5, 1).empty());
  CHECK(invariant_subspace(standard_group("T"), 1.5, 2).empty());

  const PointGroup i = standard_group("I");
  for (int L = 1; L <= 5; ++L) CHECK(invariant_subspace_coeffs(i, L).empty());
  CHECK(invariant_subspace_coeffs(i, 6).size() == 1);

  CHECK(invariant_subspace(standard_group("O"), 2.0, 1).empty());
}

TEST_CASE("decoupling group checks") {
  const PointGroup t = standard_group("T");
  const PointGroup o = standard_group("O");

  std::vector<Matrix> spin1_all;
  for (int L = 1; L <= 2; ++L)
    for (int M = -L; M <= L; ++M) spin1_all.push_back(multipole_operator(1.0, L, M));
  CHECK(is_decoupling_group(t, SpinEnsemble({1.0}), spin1_all));

  const PointGroup t_rot = t_with_diagonal_c2();
  std::vector<Matrix> rank3 = {multipole_operator(1.5, 3, 2) + multipole_operator(1.5, 3, -2)};
  CHECK_FALSE(is_decoupling_group(t_rot, SpinEnsemble({1.5}), rank3));

  std::vector<Matrix> spin32_all;
  for (int L = 1; L <= 3; ++L)
    for (int M = -L; M <= L; ++M) spin32_all.push_back(multipole_operator(1.5, L, M));
  CHECK(is_decoupling_group(o, SpinEnsemble({1.5}), spin32_all));
}

TEST_CASE("smallest decoupling groups") {
  CHECK(smallest_decoupling_group(1) == "D2");
  CHECK(smallest_decoupling_group(2) == "T");
  CHECK(smallest_decoupling_group(3) == "O");
  CHECK(smallest_decoupling_group(4) == "I");
  CHECK(smallest_decoupling_group(5) == "I");
  CHECK_FALSE(smallest_decoupling_group(6).has_value());
  CHECK_THROWS_AS(smallest_decoupling_group(0), std::invalid_argument);

  CHECK(multispin_decoupling_group(2, {1, 1}) == "T");
  CHECK(multispin_decoupling_group(2, {1, 3}) == "I");
  CHECK_FALSE(multispin_decoupling_group(3, {2, 2, 2}).has_value());
  CHECK(multispin_decoupling_group(3, {1, 1, 1, 1}) == "O");
}

TEST_CASE("eulerian word reproduces the group average") {
  Rng rng(31);
  for (const std::string name : {"D2", "T"}) {
    const PointGroup g = standard_group(name);
    const SequenceWord word = eulerian_cycle(build_cayley_graph(g));
    const SpinEnsemble ens({1.0});
    const PulseSequence seq = word_to_pulses(word, g, 1.0);

    const Matrix s = random_gue(rng, 3, 1.0);
    Matrix avg = Matrix::Zero(3, 3);
    for (const Rotation& r : toggling_frame(seq)) {
      const Matrix u = global_rotation(r, ens).mat;
      avg += u.adjoint() * s * u;
    }
    avg /= static_cast<double>(seq.steps.size());
    CHECK((avg - group_average(s, g, ens).averaged).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("table of annihilated ranks per group") {
  // Each listed group kills every multipole up to its L_max at j = L_max/2.
  const std::vector<std::pair<std::string, int>> rows = {
      {"D2", 1}, {"T", 2}, {"O", 3}, {"I", 4}, {"I", 5}};
  for (const auto& [name, l_max] : rows) {
    const double j = l_max / 2.0;
    const PointGroup g = standard_group(name);
    const SpinEnsemble ens({j});
    for (int L = 1; L <= l_max; ++L)
      for (int M = -L; M <= L; ++M) {
        const auto res = group_average(multipole_operator(j, L, M), g, ens);
        CHECK(res.residual_norm < 1e-10);
      }
  }
}
