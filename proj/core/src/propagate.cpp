#include "pgdd/propagate.hpp"

#include <atomic>
#include <cmath>
#include <iostream>
#include <stdexcept>

namespace pgdd {

namespace {

Matrix hermitian_exp(const Matrix& H, double scale) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(H);
  const Complex img(0, 1);
  Vector phases(H.rows());
  for (int i = 0; i < H.rows(); ++i) phases(i) = std::exp(-img * scale * es.eigenvalues()(i));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

void require_hermitian(const Matrix& H, const char* where) {
  if ((H - H.adjoint()).cwiseAbs().maxCoeff() > 1e-10 * (1.0 + H.cwiseAbs().maxCoeff()))
    throw std::invalid_argument(std::string(where) + ": Hamiltonian is not Hermitian");
}

}  // namespace

void ErrorModel::validate() const {
  if (axis_misspec_eps < 0.0 || axis_misspec_eps >= 1.0 / std::sqrt(2.0))
    throw std::invalid_argument("ErrorModel: axis_misspec_eps must lie in [0, 1/sqrt(2))");
  if (!(pulse_amplitude_chi > 0.0))
    throw std::invalid_argument("ErrorModel: pulse amplitude must be positive");
}

Matrix free_propagator(const Matrix& H, double t) {
  require_hermitian(H, "free_propagator");
  return hermitian_exp(H, t);
}

FreeEvolver::FreeEvolver(const Matrix& H) {
  require_hermitian(H, "FreeEvolver");
  Eigen::SelfAdjointEigenSolver<Matrix> es(H);
  vecs_ = es.eigenvectors();
  vals_ = es.eigenvalues();
}

Matrix FreeEvolver::at(double t) const {
  const Complex img(0, 1);
  Vector phases(vals_.size());
  for (int i = 0; i < vals_.size(); ++i) phases(i) = std::exp(-img * t * vals_(i));
  return vecs_ * phases.asDiagonal() * vecs_.adjoint();
}

Pulse perturbed_pulse(const Pulse& pulse, const ErrorModel& model) {
  model.validate();
  Pulse out = pulse;
  out.angle = pulse.angle * (1.0 + model.flip_angle_eps);
  const double eps = model.axis_misspec_eps;
  if (eps > 0.0) {
    const Vec3 n = pulse.axis.normalized();
    const Vec3 ref = std::abs(n.z()) < 0.99 ? Vec3(0, 0, 1) : Vec3(1, 0, 0);
    const Vec3 p1 = ref.cross(n).normalized();
    const Vec3 p2 = n.cross(p1);
    out.axis = (std::sqrt(1.0 - 2.0 * eps * eps) * n + eps * p1 + eps * p2).normalized();
  }
  return out;
}

std::vector<Matrix> pulse_unitaries(const PulseSequence& seq, const SpinEnsemble& ensemble,
                                    const ErrorModel* model) {
  const int d = ensemble.dim();
  std::vector<Matrix> out;
  out.reserve(seq.steps.size());
  for (const auto& step : seq.steps) {
    if (!step.pulse) {
      out.push_back(Matrix::Identity(d, d));
      continue;
    }
    const Pulse p = model ? perturbed_pulse(*step.pulse, *model) : *step.pulse;
    out.push_back(global_rotation(rotation_from_axis_angle(p.axis, p.angle), ensemble).mat);
  }
  return out;
}

Matrix ideal_sequence_propagator(const Matrix& H, const PulseSequence& seq,
                                 const SpinEnsemble& ensemble) {
  return sequence_propagator_cached(FreeEvolver(H), seq, pulse_unitaries(seq, ensemble));
}

Matrix sequence_propagator_cached(const FreeEvolver& evolver, const PulseSequence& seq,
                                  const std::vector<Matrix>& pulses) {
  const int d = evolver.dim();
  Matrix U = Matrix::Identity(d, d);
  Matrix cached_free;
  double cached_t = -1.0;
  for (std::size_t k = 0; k < seq.steps.size(); ++k) {
    const double t = seq.steps[k].interval;
    if (t > 0.0) {
      if (t != cached_t) {
        cached_free = evolver.at(t);
        cached_t = t;
      }
      U = cached_free * U;
    }
    U = pulses[k] * U;
  }
  return U;
}

Matrix finite_pulse_propagator(const Matrix& H, const PulseSequence& seq, const ErrorModel& model,
                               const SpinEnsemble& ensemble) {
  model.validate();
  if (!model.finite_pulses())
    throw std::invalid_argument("finite_pulse_propagator: chi must be finite");
  const int d = ensemble.dim();
  if (H.rows() != d) throw std::invalid_argument("finite_pulse_propagator: dimension mismatch");
  const double chi = model.pulse_amplitude_chi;

  // Global spin projections J.n are reused across pulses with equal axes.
  const FreeEvolver evolver(H);
  Matrix U = Matrix::Identity(d, d);
  for (const auto& step : seq.steps) {
    if (step.interval > 0.0) U = evolver.at(step.interval) * U;
    if (!step.pulse) continue;
    const Pulse p = perturbed_pulse(*step.pulse, model);
    if (p.angle == 0.0) continue;
    const double sign = p.angle > 0 ? 1.0 : -1.0;
    const double tau_p = std::abs(p.angle) / chi;
    Matrix jn = Matrix::Zero(d, d);
    for (int site = 0; site < ensemble.num_sites(); ++site)
      jn += embed_operator(spin_projection(ensemble.spins[site], p.axis), site, ensemble).mat;
    U = hermitian_exp(H + sign * chi * jn, tau_p) * U;
  }
  return U;
}

Matrix first_order_epo(const Matrix& H, const PulseSequence& seq, const SpinEnsemble& ensemble) {
  const int d = ensemble.dim();
  if (H.rows() != d) throw std::invalid_argument("first_order_epo: dimension mismatch");
  Matrix epo = Matrix::Zero(d, d);
  const std::vector<Rotation> frames = toggling_frame(seq);
  for (std::size_t k = 0; k < seq.steps.size(); ++k) {
    if (seq.steps[k].interval == 0.0) continue;
    const Matrix g = global_rotation(frames[k], ensemble).mat;
    epo += seq.steps[k].interval * (g.adjoint() * H * g);
  }
  return epo;
}

double distance(const Matrix& U, int d) {
  const double nonunitarity =
      (U.adjoint() * U - Matrix::Identity(U.rows(), U.cols())).cwiseAbs().maxCoeff();
  if (nonunitarity > 1e-4)
    throw std::invalid_argument("distance: operator is not unitary (deviation " +
                                std::to_string(nonunitarity) + ")");
  if (nonunitarity > 1e-8) {
    static std::atomic<bool> warned{false};
    if (!warned.exchange(true))
      std::cerr << "pgdd: warning: distance() on a marginally unitary operator (deviation "
                << nonunitarity << ")\n";
  }
  const double fidelity = std::abs(U.trace()) / static_cast<double>(d);
  return std::sqrt(std::min(1.0, std::max(0.0, 1.0 - fidelity)));
}

double distance_to(const Matrix& U, const Matrix& target, int d) {
  return distance(target.adjoint() * U, d);
}

Matrix dcg_gate_generator(const DcgGate& gate, const SpinEnsemble& ensemble) {
  const auto j1 = angular_momentum_ops(ensemble.spins.at(gate.site1));
  const auto j2 = angular_momentum_ops(ensemble.spins.at(gate.site2));
  return embed_operator(j1[gate.axis], gate.site1, ensemble).mat *
         embed_operator(j2[gate.axis], gate.site2, ensemble).mat;
}

Matrix dcg_target_unitary(const DcgGate& gate, const SpinEnsemble& ensemble) {
  return hermitian_exp(dcg_gate_generator(gate, ensemble), gate.angle);
}

Matrix dcg_propagator(const Matrix& H, const PulseSequence& seq, const DcgGate& gate,
                      const SpinEnsemble& ensemble) {
  const int d = ensemble.dim();
  if (H.rows() != d) throw std::invalid_argument("dcg_propagator: dimension mismatch");
  double tau_g = gate.segment_time;
  if (tau_g <= 0.0) {
    for (const auto& s : seq.steps)
      if (s.interval > 0) {
        tau_g = s.interval;
        break;
      }
  }
  if (tau_g <= 0.0) throw std::invalid_argument("dcg_propagator: no usable segment time");
  const double chi = gate.angle / tau_g;
  const Matrix jg = dcg_gate_generator(gate, ensemble);

  const FreeEvolver evolver(H);
  // Segment propagators are H-dependent but shared by all identity slots.
  const Matrix leg_fwd = hermitian_exp(H + chi * jg, tau_g);
  const Matrix leg_bwd = hermitian_exp(H - chi * jg, tau_g);
  const Matrix gate_segment = hermitian_exp(H + 0.5 * chi * jg, 2.0 * tau_g);
  const std::vector<Matrix> pulses = pulse_unitaries(seq, ensemble);

  Matrix U = Matrix::Identity(d, d);
  Matrix cached_free;
  double cached_t = -1.0;
  for (std::size_t k = 0; k < seq.steps.size(); ++k) {
    const auto& step = seq.steps[k];
    if (step.interval > 0.0) {
      if (step.interval != cached_t) {
        cached_free = evolver.at(step.interval);
        cached_t = step.interval;
      }
      U = cached_free * U;
    }
    if (step.pulse) {
      U = pulses[k] * U;
    } else if (step.gate_slot) {
      U = gate_segment * U;
    } else {
      U = leg_bwd * (leg_fwd * U);
    }
  }
  return U;
}

}  // namespace pgdd
