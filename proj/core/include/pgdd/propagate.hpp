#pragma once

#include <limits>
#include <vector>

#include "pgdd/ensemble.hpp"
#include "pgdd/sequence.hpp"

namespace pgdd {

// Systematic pulse imperfections.  chi is the pulse amplitude in rad/s for
// finite-duration mode; infinity means instantaneous pulses.
struct ErrorModel {
  double flip_angle_eps = 0.0;
  double axis_misspec_eps = 0.0;
  double pulse_amplitude_chi = std::numeric_limits<double>::infinity();

  bool finite_pulses() const { return std::isfinite(pulse_amplitude_chi); }
  void validate() const;
};

// exp(-i H t) via eigendecomposition; unitary to machine precision.
Matrix free_propagator(const Matrix& H, double t);

// Eigendecomposition cached for repeated exp(-i H t) evaluations.
class FreeEvolver {
 public:
  explicit FreeEvolver(const Matrix& H);
  Matrix at(double t) const;
  int dim() const { return static_cast<int>(vals_.size()); }

 private:
  Matrix vecs_;
  Eigen::VectorXd vals_;
};

// Realized (axis, angle) under flip-angle and axis-misspecification errors:
// angle -> angle (1 + eps_FA) and
// n -> sqrt(1 - 2 eps_AM^2) n + eps_AM n1_perp + eps_AM n2_perp,
// with the deterministic frame n1_perp = normalize(z x n) (x x n when n ~ z),
// n2_perp = n x n1_perp.
Pulse perturbed_pulse(const Pulse& pulse, const ErrorModel& model);

// Unitary of each step's pulse (identity for identity slots); systematic
// errors applied when model is non-null.  Independent of the Hamiltonian,
// so callers can compute these once per (sequence, ensemble).
std::vector<Matrix> pulse_unitaries(const PulseSequence& seq, const SpinEnsemble& ensemble,
                                    const ErrorModel* model = nullptr);

// U = P_N e^{-iH tau_N} ... P_1 e^{-iH tau_1}: one free interval before
// each pulse, instantaneous ideal pulses.
Matrix ideal_sequence_propagator(const Matrix& H, const PulseSequence& seq,
                                 const SpinEnsemble& ensemble);

// Same product from precomputed pieces (scan hot path).
Matrix sequence_propagator_cached(const FreeEvolver& evolver, const PulseSequence& seq,
                                  const std::vector<Matrix>& pulses);

// Finite-duration pulses: each pulse becomes exp(-i (H + s chi J.n) theta/chi)
// with the realized axis/angle and the global J.n = sum of embedded spin
// projections; free intervals evolve under H alone.
Matrix finite_pulse_propagator(const Matrix& H, const PulseSequence& seq, const ErrorModel& model,
                               const SpinEnsemble& ensemble);

// sum_k g_k^dag (H tau_k) g_k over the toggling-frame prefix rotations.
Matrix first_order_epo(const Matrix& H, const PulseSequence& seq, const SpinEnsemble& ensemble);

// sqrt(1 - |Tr U| / d), clamped to [0, 1].  Warns once above 1e-8
// non-unitarity, throws above 1e-4.
double distance(const Matrix& U, int d);
// Distance to a target unitary: distance(V^dag U).
double distance_to(const Matrix& U, const Matrix& target, int d);

// Balanced-pair realization of a dynamically corrected gate slot.  The
// commuting gate generator is J_axis^(site1) J_axis^(site2); identity slots
// run the generator there-and-back (+chi for tau_g, -chi for tau_g), the
// terminal slot runs it at half amplitude for 2 tau_g, so both have
// identical first-order error integrals while netting identity and the
// target gate respectively.
struct DcgGate {
  int site1 = 0;
  int site2 = 1;
  int axis = 2;          // 0,1,2 -> x,y,z
  double angle = 1.0;    // chi * tau_g
  double segment_time = 0.0;  // tau_g; <= 0 means use the sequence tau0
};

Matrix dcg_gate_generator(const DcgGate& gate, const SpinEnsemble& ensemble);
Matrix dcg_target_unitary(const DcgGate& gate, const SpinEnsemble& ensemble);
Matrix dcg_propagator(const Matrix& H, const PulseSequence& seq, const DcgGate& gate,
                      const SpinEnsemble& ensemble);

}  // namespace pgdd
