#include "pgdd/interaction.hpp"

#include <array>
#include <cmath>
#include <set>
#include <stdexcept>

#include "pgdd/multipole.hpp"

namespace pgdd {

namespace {

int flat_index(const std::vector<int>& idx) {
  int f = 0;
  for (int a : idx) f = 3 * f + a;
  return f;
}

// Enumerates all 3^K Cartesian multi-indices.
template <typename F>
void for_each_index(int rank, F&& f) {
  std::vector<int> idx(rank, 0);
  while (true) {
    f(idx);
    int pos = rank - 1;
    while (pos >= 0 && ++idx[pos] == 3) idx[pos--] = 0;
    if (pos < 0) break;
  }
}

double levi_civita(int a, int b, int c) {
  if (a == b || b == c || a == c) return 0.0;
  return ((b - a + 3) % 3 == 1) ? 1.0 : -1.0;
}

std::vector<std::vector<double>> isotropic_tensor_basis(int rank) {
  std::vector<std::vector<double>> basis;
  const int size = static_cast<int>(std::pow(3, rank));
  if (rank == 2) {
    std::vector<double> delta(size, 0.0);
    for (int a = 0; a < 3; ++a) delta[flat_index({a, a})] = 1.0;
    basis.push_back(delta);
  } else if (rank == 3) {
    std::vector<double> eps(size, 0.0);
    for_each_index(3, [&](const std::vector<int>& idx) {
      eps[flat_index(idx)] = levi_civita(idx[0], idx[1], idx[2]);
    });
    basis.push_back(eps);
  } else if (rank == 4) {
    // The three delta-delta pairings (not mutually orthogonal).
    const std::array<std::array<int, 4>, 3> pairings = {{{0, 1, 2, 3}, {0, 3, 1, 2}, {0, 2, 1, 3}}};
    for (const auto& p : pairings) {
      std::vector<double> t(size, 0.0);
      for_each_index(4, [&](const std::vector<int>& idx) {
        if (idx[p[0]] == idx[p[1]] && idx[p[2]] == idx[p[3]]) t[flat_index(idx)] = 1.0;
      });
      basis.push_back(t);
    }
  } else {
    throw std::invalid_argument("isotropic tensors implemented for ranks 2..4 only");
  }
  return basis;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

double& InteractionTensor::at(const std::vector<int>& idx) { return entries.at(flat_index(idx)); }
double InteractionTensor::at(const std::vector<int>& idx) const {
  return entries.at(flat_index(idx));
}

InteractionTensor zero_tensor(const std::vector<int>& sites) {
  InteractionTensor t;
  t.sites = sites;
  t.entries.assign(static_cast<std::size_t>(std::pow(3, sites.size())), 0.0);
  return t;
}

SpinOperator multilinear_hamiltonian(const InteractionTensor& tensor,
                                     const SpinEnsemble& ensemble) {
  const int rank = tensor.rank();
  if (rank < 1) throw std::invalid_argument("multilinear_hamiltonian: empty tensor");
  std::set<int> distinct(tensor.sites.begin(), tensor.sites.end());
  if (static_cast<int>(distinct.size()) != rank)
    throw std::invalid_argument("multilinear_hamiltonian: repeated site");

  // Embedded J_a for every (site, axis) used.
  std::vector<std::array<Matrix, 3>> embedded(rank);
  for (int k = 0; k < rank; ++k) {
    const auto ops = angular_momentum_ops(ensemble.spins.at(tensor.sites[k]));
    for (int a = 0; a < 3; ++a) embedded[k][a] = embed_operator(ops[a], tensor.sites[k], ensemble).mat;
  }

  const int d = ensemble.dim();
  Matrix H = Matrix::Zero(d, d);
  for_each_index(rank, [&](const std::vector<int>& idx) {
    const double h = tensor.at(idx);
    if (h == 0.0) return;
    Matrix term = embedded[0][idx[0]];
    for (int k = 1; k < rank; ++k) term = term * embedded[k][idx[k]];
    H += h * term;
  });
  return {ensemble.dims(), std::move(H)};
}

AnisotropyReport anisotropy_check(const InteractionTensor& tensor) {
  AnisotropyReport report;
  const int rank = tensor.rank();
  if (rank < 2 || rank > 4)
    throw std::invalid_argument("anisotropy_check: supported ranks are 2, 3, 4");

  if (rank == 2) {
    double tr = 0;
    for (int a = 0; a < 3; ++a) tr += tensor.at({a, a});
    report.conditions.emplace_back("trace", tr);
  } else if (rank == 3) {
    double c = 0;
    for_each_index(3, [&](const std::vector<int>& idx) {
      c += levi_civita(idx[0], idx[1], idx[2]) * tensor.at(idx);
    });
    report.conditions.emplace_back("epsilon", c);
  } else {
    double c1 = 0, c2 = 0, c3 = 0;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        c1 += tensor.at({a, a, b, b});
        c2 += tensor.at({a, b, a, b});
        c3 += tensor.at({a, b, b, a});
      }
    report.conditions.emplace_back("delta12.delta34", c1);
    report.conditions.emplace_back("delta13.delta24", c2);
    report.conditions.emplace_back("delta14.delta23", c3);
  }
  report.anisotropic = true;
  for (const auto& [name, value] : report.conditions)
    if (std::abs(value) > 1e-12) report.anisotropic = false;
  return report;
}

InteractionTensor project_anisotropic(const InteractionTensor& tensor) {
  InteractionTensor out = tensor;
  std::vector<std::vector<double>> basis = isotropic_tensor_basis(tensor.rank());
  // Orthonormalize the isotropic basis, then subtract projections.
  std::vector<std::vector<double>> ortho;
  for (auto v : basis) {
    for (const auto& u : ortho) {
      const double c = dot(u, v);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * u[i];
    }
    const double n = std::sqrt(dot(v, v));
    if (n > 1e-12) {
      for (auto& x : v) x /= n;
      ortho.push_back(std::move(v));
    }
  }
  for (const auto& u : ortho) {
    const double c = dot(u, out.entries);
    for (std::size_t i = 0; i < u.size(); ++i) out.entries[i] -= c * u[i];
  }
  return out;
}

Matrix isotropic_operator(double j1, double j2, int L) {
  if (L < 0 || L > std::min(spin_dimension(j1), spin_dimension(j2)) - 1)
    throw std::invalid_argument("isotropic_operator: L out of range");
  const int d1 = spin_dimension(j1), d2 = spin_dimension(j2);
  Matrix out = Matrix::Zero(d1 * d2, d1 * d2);
  const double scale = 1.0 / std::sqrt(2.0 * L + 1.0);
  for (int M = -L; M <= L; ++M) {
    const double sign = (M % 2 == 0) ? 1.0 : -1.0;
    out += sign * scale * kron(multipole_operator(j1, L, M), multipole_operator(j2, L, -M));
  }
  return out;
}

SpinOperator remove_isotropic(const SpinOperator& H, const SpinEnsemble& ensemble) {
  SpinOperator out = H;
  for (int p = 0; p < ensemble.num_sites(); ++p) {
    for (int q = p + 1; q < ensemble.num_sites(); ++q) {
      const double jp = ensemble.spins[p], jq = ensemble.spins[q];
      const int l_top = std::min(spin_dimension(jp), spin_dimension(jq)) - 1;
      for (int L = 1; L <= l_top; ++L) {
        // Embedded I_L on the pair (p, q).
        const int d = ensemble.dim();
        Matrix iso = Matrix::Zero(d, d);
        const double scale = 1.0 / std::sqrt(2.0 * L + 1.0);
        for (int M = -L; M <= L; ++M) {
          const double sign = (M % 2 == 0) ? 1.0 : -1.0;
          iso += sign * scale * (embed_operator(multipole_operator(jp, L, M), p, ensemble).mat *
                                 embed_operator(multipole_operator(jq, L, -M), q, ensemble).mat);
        }
        const Complex c = hs_inner(iso, out.mat) / hs_inner(iso, iso);
        out.mat -= c * iso;
      }
    }
  }
  return out;
}

SpinOperator cross_kerr_hamiltonian(const std::vector<double>& alphas, int d) {
  if (d < 2) throw std::invalid_argument("cross_kerr_hamiltonian: d must be >= 2");
  if (alphas.size() != static_cast<std::size_t>((d - 1) * (d - 1)))
    throw std::invalid_argument("cross_kerr_hamiltonian: need (d-1)^2 coefficients");
  Matrix H = Matrix::Zero(d * d, d * d);
  for (int i = 1; i < d; ++i)
    for (int j = 1; j < d; ++j) H(i * d + j, i * d + j) = alphas[(i - 1) * (d - 1) + (j - 1)];
  return {{d, d}, std::move(H)};
}

InteractionTensor dipolar_tensor(int site_i, int site_j, const Vec3& e) {
  const Vec3 n = e.normalized();
  InteractionTensor t = zero_tensor({site_i, site_j});
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) t.at({a, b}) = 3.0 * n(a) * n(b) - (a == b ? 1.0 : 0.0);
  return t;
}

SpinOperator disorder_hamiltonian(const std::vector<double>& deltas,
                                  const std::vector<Vec3>& directions,
                                  const SpinEnsemble& ensemble) {
  if (deltas.size() != directions.size() ||
      static_cast<int>(deltas.size()) != ensemble.num_sites())
    throw std::invalid_argument("disorder_hamiltonian: need one (delta, direction) per site");
  const int d = ensemble.dim();
  Matrix H = Matrix::Zero(d, d);
  for (int i = 0; i < ensemble.num_sites(); ++i)
    H += deltas[i] *
         embed_operator(spin_projection(ensemble.spins[i], directions[i]), i, ensemble).mat;
  return {ensemble.dims(), std::move(H)};
}

}  // namespace pgdd
