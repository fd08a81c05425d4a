#pragma once

#include <vector>

#include "pgdd/spin_ops.hpp"

namespace pgdd {

// Rank-L multipole components of an operator, ordered M = L..-L (matching
// the spin-L ket ordering used by the Majorana map).
struct MultipoleVector {
  int L = 0;
  Vector components;  // size 2L+1

  double norm() const { return components.norm(); }
};

// Orthonormal multipolar (spherical tensor) operator T_LM on spin j:
//   <j m' | T_LM | j m> = sqrt((2L+1)/(2j+1)) <j m, L M | j m'>.
// The set {T_LM : L = 0..2j, |M| <= L} is orthonormal under the
// Hilbert-Schmidt inner product, T_LM^dagger = (-1)^M T_{L,-M}, and
// conjugation by wigner_d rotates it with the rank-L Wigner-D matrix.
const Matrix& multipole_operator(double j, int L, int M);

// h_LM = Tr(T_LM^dagger H) for all L = 0..2j; the expansion reconstructs H
// exactly.
std::vector<MultipoleVector> multipole_decompose(const Matrix& H, double j);

// Sum over L of h_L . T_L.
Matrix multipole_reconstruct(const std::vector<MultipoleVector>& comps, double j);

// Rank-L Wigner-D matrix D^(L)_{M'M}(r), ordered M = L..-L.
Matrix wigner_d_rank(int L, const Rotation& r);

}  // namespace pgdd
