#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pgdd/ensemble.hpp"
#include "pgdd/point_group.hpp"
#include "pgdd/spin_ops.hpp"

namespace pgdd {

// Result of the group-averaging map Pi_G(S) = (1/|G|) sum_g U_g^dag S U_g.
struct SymmetrizedResult {
  Matrix averaged;
  bool is_identity_multiple = false;
  // Hilbert-Schmidt norm of the traceless part of the average, after the
  // input has been normalized to unit HS norm (scale-free).
  double residual_norm = 0.0;
};

inline constexpr double kSymmetrizeTol = 1e-10;

SymmetrizedResult group_average(const Matrix& S, const PointGroup& group,
                                const SpinEnsemble& ensemble, double tol = kSymmetrizeTol);

// Orthonormal basis of the G-invariant operators inside span{T_LM}, found
// as the eigenvalue-1 eigenspace of the averaged rank-L Wigner-D matrix.
std::vector<Matrix> invariant_subspace(const PointGroup& group, double j, int L);

// Coefficient vectors (M = L..-L) of the invariant basis, without building
// the operators.
std::vector<Vector> invariant_subspace_coeffs(const PointGroup& group, int L);

bool is_decoupling_group(const PointGroup& group, const SpinEnsemble& ensemble,
                         const std::vector<Matrix>& subspace, double tol = kSymmetrizeTol);

// Smallest group among {D2, T, O, I} annihilating every rank 1..L_max
// multipole; nullopt when none exists (L_max >= 6).
std::optional<std::string> smallest_decoupling_group(int l_max);

// K-body multilinear case: effective 2j = sum of the K largest per-site
// L_max values.
std::optional<std::string> multispin_decoupling_group(int K,
                                                      const std::vector<int>& l_max_per_site);

}  // namespace pgdd
