#include "pgdd/symmetrize.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pgdd/multipole.hpp"

namespace pgdd {

namespace {

// Pairwise tree reduction keeps the summation order independent of any
// parallel evaluation schedule.
Matrix tree_sum(std::vector<Matrix>& terms, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return std::move(terms[lo]);
  const std::size_t mid = lo + (hi - lo) / 2;
  return tree_sum(terms, lo, mid) + tree_sum(terms, mid, hi);
}

}  // namespace

SymmetrizedResult group_average(const Matrix& S, const PointGroup& group,
                                const SpinEnsemble& ensemble, double tol) {
  const int d = ensemble.dim();
  if (S.rows() != d || S.cols() != d)
    throw std::invalid_argument("group_average: operator does not match ensemble dimension");

  std::vector<Matrix> terms;
  terms.reserve(group.order());
  for (const auto& g : group.elements) {
    const Matrix u = global_rotation(g, ensemble).mat;
    terms.push_back(u.adjoint() * S * u);
  }
  SymmetrizedResult result;
  result.averaged = tree_sum(terms, 0, terms.size()) / static_cast<double>(group.order());

  const double scale = hs_norm(S);
  const Matrix traceless =
      result.averaged - (result.averaged.trace() / static_cast<double>(d)) * Matrix::Identity(d, d);
  result.residual_norm = scale > 0 ? hs_norm(traceless) / scale : 0.0;
  result.is_identity_multiple = result.residual_norm < tol;
  return result;
}

std::vector<Vector> invariant_subspace_coeffs(const PointGroup& group, int L) {
  const int n = 2 * L + 1;
  Matrix avg = Matrix::Zero(n, n);
  for (const auto& g : group.elements) avg += wigner_d_rank(L, g);
  avg /= static_cast<double>(group.order());
  // The average of a unitary rep over a group is an orthogonal projector;
  // Hermitize to clean up roundoff before the eigensolve.
  avg = 0.5 * (avg + avg.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<Matrix> es(avg);

  std::vector<Vector> basis;
  for (int i = 0; i < n; ++i)
    if (std::abs(es.eigenvalues()(i) - 1.0) < 1e-8) basis.push_back(es.eigenvectors().col(i));
  return basis;
}

std::vector<Matrix> invariant_subspace(const PointGroup& group, double j, int L) {
  const int d = spin_dimension(j);
  if (L < 0 || L > d - 1) throw std::invalid_argument("invariant_subspace: L out of range");
  std::vector<Matrix> ops;
  for (const Vector& v : invariant_subspace_coeffs(group, L)) {
    Matrix op = Matrix::Zero(d, d);
    for (int M = L; M >= -L; --M) op += v(L - M) * multipole_operator(j, L, M);
    ops.push_back(std::move(op));
  }
  return ops;
}

bool is_decoupling_group(const PointGroup& group, const SpinEnsemble& ensemble,
                         const std::vector<Matrix>& subspace, double tol) {
  for (const Matrix& op : subspace)
    if (!group_average(op, group, ensemble, tol).is_identity_multiple) return false;
  return true;
}

std::optional<std::string> smallest_decoupling_group(int l_max) {
  if (l_max < 1) throw std::invalid_argument("smallest_decoupling_group: l_max must be >= 1");
  switch (l_max) {
    case 1: return "D2";
    case 2: return "T";
    case 3: return "O";
    case 4:
    case 5: return "I";
    default: return std::nullopt;
  }
}

std::optional<std::string> multispin_decoupling_group(int K,
                                                      const std::vector<int>& l_max_per_site) {
  if (K < 1 || K > static_cast<int>(l_max_per_site.size()))
    throw std::invalid_argument("multispin_decoupling_group: bad K");
  std::vector<int> sorted = l_max_per_site;
  std::sort(sorted.rbegin(), sorted.rend());
  int two_j_eff = 0;
  for (int i = 0; i < K; ++i) two_j_eff += sorted[i];
  return smallest_decoupling_group(two_j_eff);
}

}  // namespace pgdd
