#include "pgdd/ensemble.hpp"

#include <stdexcept>

namespace pgdd {

SpinEnsemble::SpinEnsemble(std::vector<double> js) : spins(std::move(js)) {
  if (spins.empty()) throw std::invalid_argument("SpinEnsemble: no spins");
  long long d = 1;
  for (double j : spins) {
    d *= spin_dimension(j);
    if (d > kMaxEnsembleDim)
      throw std::invalid_argument("SpinEnsemble: total dimension exceeds cap " +
                                  std::to_string(kMaxEnsembleDim));
  }
}

int SpinEnsemble::dim() const {
  int d = 1;
  for (double j : spins) d *= spin_dimension(j);
  return d;
}

std::vector<int> SpinEnsemble::dims() const {
  std::vector<int> out;
  for (double j : spins) out.push_back(spin_dimension(j));
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) out.block(i * b.rows(), k * b.cols(), b.rows(), b.cols()) = a(i, k) * b;
  return out;
}

SpinOperator embed_operator(const Matrix& op, int site, const SpinEnsemble& ensemble) {
  if (site < 0 || site >= ensemble.num_sites())
    throw std::invalid_argument("embed_operator: site index out of range");
  const int d_site = spin_dimension(ensemble.spins[site]);
  if (op.rows() != d_site || op.cols() != d_site)
    throw std::invalid_argument("embed_operator: operator does not match site dimension");
  Matrix out = Matrix::Identity(1, 1);
  for (int k = 0; k < ensemble.num_sites(); ++k) {
    const int d = spin_dimension(ensemble.spins[k]);
    out = kron(out, k == site ? op : Matrix::Identity(d, d));
  }
  return {ensemble.dims(), std::move(out)};
}

SpinOperator global_rotation(const Rotation& r, const SpinEnsemble& ensemble) {
  Matrix out = Matrix::Identity(1, 1);
  for (double j : ensemble.spins) out = kron(out, wigner_d(j, r));
  return {ensemble.dims(), std::move(out)};
}

}  // namespace pgdd
