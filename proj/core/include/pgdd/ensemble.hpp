#pragma once

#include <vector>

#include "pgdd/rotation.hpp"
#include "pgdd/spin_ops.hpp"

namespace pgdd {

// Interacting spins j_1..j_N.  The total dimension is capped so a stray
// config cannot allocate unboundedly.
struct SpinEnsemble {
  std::vector<double> spins;

  SpinEnsemble() = default;
  explicit SpinEnsemble(std::vector<double> js);

  int num_sites() const { return static_cast<int>(spins.size()); }
  int dim() const;
  std::vector<int> dims() const;
};

inline constexpr int kMaxEnsembleDim = 4096;

Matrix kron(const Matrix& a, const Matrix& b);

// op acting on `site`, identity elsewhere.
SpinOperator embed_operator(const Matrix& op, int site, const SpinEnsemble& ensemble);

// The same rotation applied to every spin: tensor product of wigner_d's.
SpinOperator global_rotation(const Rotation& r, const SpinEnsemble& ensemble);

}  // namespace pgdd
