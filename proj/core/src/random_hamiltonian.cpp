#include "pgdd/random_hamiltonian.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pgdd {

namespace {

std::uint64_t splitmix64(std::uint64_t& s) {
  std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t derive_stream(std::uint64_t seed, std::initializer_list<std::uint64_t> parts) {
  std::uint64_t s = seed ^ 0xa0761d6478bd642fULL;
  std::uint64_t h = splitmix64(s);
  for (std::uint64_t p : parts) {
    s ^= p + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h = splitmix64(s);
  }
  return h;
}

std::uint64_t Rng::next_u64() { return splitmix64(state_); }

double Rng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

Vec3 Rng::unit_vector() {
  while (true) {
    Vec3 v(normal(), normal(), normal());
    const double n = v.norm();
    if (n > 1e-6) return v / n;
  }
}

Matrix random_gue(Rng& rng, int dim, double norm) {
  Matrix a(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int k = 0; k < dim; ++k) a(i, k) = Complex(rng.normal(), rng.normal());
  Matrix h = 0.5 * (a + a.adjoint());
  const double s = sup_norm(h);
  if (norm > 0 && s > 0) h *= norm / s;
  return h;
}

Vector random_multipole_vector(Rng& rng, int L) {
  Vector v = Vector::Zero(2 * L + 1);
  v(L) = rng.normal();  // M = 0 component is real
  for (int M = 1; M <= L; ++M) {
    const Complex c(rng.normal(), rng.normal());
    v(L - M) = c / std::sqrt(2.0);
    v(L + M) = (M % 2 == 0 ? 1.0 : -1.0) * std::conj(v(L - M));
  }
  const double n = v.norm();
  if (n > 0) v /= n;
  return v;
}

InteractionTensor random_tensor(Rng& rng, const std::vector<int>& sites, bool anisotropic) {
  InteractionTensor t = zero_tensor(sites);
  for (auto& x : t.entries) x = rng.normal();
  if (anisotropic) t = project_anisotropic(t);
  return t;
}

SpinOperator random_multilinear_hamiltonian(Rng& rng, const SpinEnsemble& ensemble,
                                            const std::vector<BodyTerm>& bodies, bool anisotropic,
                                            double norm) {
  if (bodies.empty()) throw std::invalid_argument("random_multilinear_hamiltonian: no terms");
  const int d = ensemble.dim();
  Matrix H = Matrix::Zero(d, d);
  for (const auto& body : bodies) {
    const bool project = anisotropic && body.sites.size() >= 2;
    H += multilinear_hamiltonian(random_tensor(rng, body.sites, project), ensemble).mat;
  }
  const double s = sup_norm(H);
  if (norm > 0 && s > 0) H *= norm / s;
  return {ensemble.dims(), std::move(H)};
}

}  // namespace pgdd
