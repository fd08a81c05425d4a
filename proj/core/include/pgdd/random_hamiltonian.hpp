#pragma once

#include <cstdint>
#include <vector>

#include "pgdd/interaction.hpp"
#include "pgdd/multipole.hpp"

namespace pgdd {

// Counter-based stream derivation: draws depend only on the seed parts, not
// on evaluation order, so parallel scans reproduce bit-identically.
std::uint64_t derive_stream(std::uint64_t seed, std::initializer_list<std::uint64_t> parts);

// Deterministic normal/uniform generator (splitmix64 + Box-Muller); avoids
// the implementation-defined std::normal_distribution.
class Rng {
 public:
  explicit Rng(std::uint64_t stream) : state_(stream) {}

  std::uint64_t next_u64();
  double uniform();       // [0, 1)
  double normal();        // standard normal
  Vec3 unit_vector();     // uniform on the sphere

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// GUE draw: independent standard complex Gaussians, Hermitized, then
// rescaled to the requested supremum operator norm.
Matrix random_gue(Rng& rng, int dim, double norm);

// Random rank-L multipole vector obeying the Hermitian constraint
// h*_{LM} = (-1)^M h_{L,-M}, normalized to unit Euclidean length.
Vector random_multipole_vector(Rng& rng, int L);

// Multilinear tensor with iid standard normal entries; isotropic components
// projected out when anisotropic is set.
InteractionTensor random_tensor(Rng& rng, const std::vector<int>& sites, bool anisotropic);

struct BodyTerm {
  std::vector<int> sites;
};

// Sum of multilinear terms, one per body structure, each drawn iid and the
// total rescaled so its supremum norm equals `norm` (0 leaves it untouched).
SpinOperator random_multilinear_hamiltonian(Rng& rng, const SpinEnsemble& ensemble,
                                            const std::vector<BodyTerm>& bodies, bool anisotropic,
                                            double norm);

}  // namespace pgdd
