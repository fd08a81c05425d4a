#pragma once

#include <string>
#include <vector>

#include "pgdd/ensemble.hpp"

namespace pgdd {

// Real Cartesian tensor h_{a1..aK} over {x,y,z} coupling K distinct sites
// multilinearly in their angular momentum operators.
struct InteractionTensor {
  std::vector<int> sites;
  std::vector<double> entries;  // 3^K values, row-major in the site order

  int rank() const { return static_cast<int>(sites.size()); }
  double& at(const std::vector<int>& idx);
  double at(const std::vector<int>& idx) const;
};

InteractionTensor zero_tensor(const std::vector<int>& sites);

// sum_a h_a * prod_k J_{a_k}^{site_k}
SpinOperator multilinear_hamiltonian(const InteractionTensor& tensor,
                                     const SpinEnsemble& ensemble);

struct AnisotropyReport {
  bool anisotropic = false;
  std::vector<std::pair<std::string, double>> conditions;  // (name, contraction value)
};

// Rank 2: trace-free; rank 3: epsilon-contraction-free; rank 4: the three
// delta-delta contractions vanish.  Tolerance 1e-12 on each contraction.
AnisotropyReport anisotropy_check(const InteractionTensor& tensor);

// Remove every isotropic tensor component (Gram-Schmidt against the
// isotropic basis of the tensor's rank).
InteractionTensor project_anisotropic(const InteractionTensor& tensor);

// I_L = sum_M (-1)^M / sqrt(2L+1) T_LM (x) T_{L,-M} on spins (j1, j2):
// Hermitian, rotation invariant, HS-orthonormal across L.
Matrix isotropic_operator(double j1, double j2, int L);

// Subtract the embedded I_L components (L >= 1) on every site pair.
SpinOperator remove_isotropic(const SpinOperator& H, const SpinEnsemble& ensemble);

// Diagonal two-qudit operator sum_{i,j>=1} alpha_{ij} |ij><ij|; alphas is
// (d-1) x (d-1), row-major.
SpinOperator cross_kerr_hamiltonian(const std::vector<double>& alphas, int d);

// Tensor of the traceless dipole coupling 3 (e.J)(e.J) - J.J along unit
// vector e, for one site pair.
InteractionTensor dipolar_tensor(int site_i, int site_j, const Vec3& e);

// sum_i delta_i m_i . J^i
SpinOperator disorder_hamiltonian(const std::vector<double>& deltas,
                                  const std::vector<Vec3>& directions,
                                  const SpinEnsemble& ensemble);

}  // namespace pgdd
