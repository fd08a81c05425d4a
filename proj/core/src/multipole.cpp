#include "pgdd/multipole.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "pgdd/clebsch_gordan.hpp"

namespace pgdd {

const Matrix& multipole_operator(double j, int L, int M) {
  const int d = spin_dimension(j);
  if (L < 0 || L > d - 1 || std::abs(M) > L)
    throw std::invalid_argument("multipole_operator: L or M out of range");

  using Key = std::tuple<int, int, int>;
  static std::map<Key, Matrix> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  const Key key{d, L, M};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  Matrix t = Matrix::Zero(d, d);
  const double scale = std::sqrt((2.0 * L + 1.0) / d);
  for (int row = 0; row < d; ++row) {    // m' = j - row
    for (int col = 0; col < d; ++col) {  // m  = j - col
      const double mp = j - row, m = j - col;
      if (std::abs(mp - m - M) > 0.5) continue;
      t(row, col) = scale * clebsch_gordan(j, m, L, M, j, mp);
    }
  }
  return cache.emplace(key, std::move(t)).first->second;
}

std::vector<MultipoleVector> multipole_decompose(const Matrix& H, double j) {
  const int d = spin_dimension(j);
  if (H.rows() != d || H.cols() != d)
    throw std::invalid_argument("multipole_decompose: dimension mismatch");
  std::vector<MultipoleVector> out;
  for (int L = 0; L <= d - 1; ++L) {
    MultipoleVector v;
    v.L = L;
    v.components.resize(2 * L + 1);
    for (int M = L; M >= -L; --M)
      v.components(L - M) = hs_inner(multipole_operator(j, L, M), H);
    out.push_back(std::move(v));
  }
  return out;
}

Matrix multipole_reconstruct(const std::vector<MultipoleVector>& comps, double j) {
  const int d = spin_dimension(j);
  Matrix H = Matrix::Zero(d, d);
  for (const auto& v : comps)
    for (int M = v.L; M >= -v.L; --M) H += v.components(v.L - M) * multipole_operator(j, v.L, M);
  return H;
}

Matrix wigner_d_rank(int L, const Rotation& r) { return wigner_d(static_cast<double>(L), r); }

}  // namespace pgdd
