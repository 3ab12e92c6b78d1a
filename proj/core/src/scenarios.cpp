#include "qagent/scenarios.hpp"

#include <cmath>
#include <stdexcept>

#include "qagent/metrics.hpp"

namespace qagent {

std::string to_string(WignerVariant v) {
  switch (v) {
    case WignerVariant::friend_von_neumann: return "friend-von-neumann";
    case WignerVariant::wigner_asks_result: return "wigner-asks-result";
    case WignerVariant::memory_handoff: return "memory-handoff";
    case WignerVariant::friend_swaps: return "friend-swaps";
  }
  throw std::logic_error("to_string: unknown Wigner variant");
}

WignerVariant wigner_variant_from_string(const std::string& tag) {
  if (tag == "friend-von-neumann") return WignerVariant::friend_von_neumann;
  if (tag == "wigner-asks-result") return WignerVariant::wigner_asks_result;
  if (tag == "memory-handoff") return WignerVariant::memory_handoff;
  if (tag == "friend-swaps") return WignerVariant::friend_swaps;
  throw std::invalid_argument("unknown Wigner variant '" + tag + "'");
}

PureState wigner_run(WignerVariant v) {
  const std::vector<int> dims{2, 2, 2};
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  // (|0> + |1>)/sqrt(2) on the dot, both memories in |0>.
  Vector psi = Vector::Zero(8);
  psi(0) = inv_sqrt2;  // |000>
  psi(4) = inv_sqrt2;  // |100>

  const Matrix copy_s_to_f = controlled_shift(dims, 0, 1);
  const Matrix copy_f_to_w = controlled_shift(dims, 1, 2);
  const Matrix swap_s_f = swap_factors(dims, 0, 1);
  const Matrix swap_f_w = swap_factors(dims, 1, 2);

  switch (v) {
    case WignerVariant::friend_von_neumann:
      psi = copy_s_to_f * psi;
      break;
    case WignerVariant::wigner_asks_result:
      psi = copy_f_to_w * copy_s_to_f * psi;
      break;
    case WignerVariant::memory_handoff:
      psi = swap_f_w * copy_s_to_f * psi;
      break;
    case WignerVariant::friend_swaps:
      psi = swap_f_w * swap_s_f * psi;
      break;
  }
  return {SystemLayout({{Label::S, 2}, {Label::O_A, 2}, {Label::O_B, 2}}), std::move(psi)};
}

Matrix simul_hamiltonian(int d) {
  if (d < 2) throw std::invalid_argument("simul_hamiltonian: dimension must be >= 2");
  const std::vector<int> dims{d, d, d};
  return swap_factors(dims, 0, 1) + swap_factors(dims, 0, 2);
}

namespace {

void require_system_qudit(const PureState& psi) {
  if (psi.layout.factor_count() != 1) {
    throw std::invalid_argument("simultaneous swap: psi must be a single-factor state");
  }
}

// Split psi = alpha |0> + beta |psi'> with <0|psi'> = 0 and beta real >= 0.
struct GroundSplit {
  Complex alpha;
  double beta = 0.0;
  Vector perp;  // normalized when beta > 0, zero vector otherwise
};

GroundSplit split_against_ground(const Vector& psi) {
  GroundSplit s;
  s.alpha = psi(0);
  Vector residual = psi;
  residual(0) = 0.0;
  s.beta = residual.norm();
  if (s.beta > 1e-12) {
    s.perp = residual / s.beta;
  } else {
    s.beta = 0.0;
    s.perp = Vector::Zero(psi.size());
  }
  return s;
}

}  // namespace

SimulSwapState simul_evolve(const PureState& psi, double t, bool with_ancilla) {
  require_system_qudit(psi);
  const int d = static_cast<int>(psi.vec.size());
  const Matrix u = evolve(simul_hamiltonian(d), t);

  if (!with_ancilla) {
    Vector init = Vector::Zero(static_cast<Eigen::Index>(d) * d * d);
    // |psi>|0>|0>
    for (int k = 0; k < d; ++k) {
      init(static_cast<Eigen::Index>(k) * d * d) = psi.vec(k);
    }
    PureState state{SystemLayout({{Label::S, d}, {Label::O_A, d}, {Label::O_B, d}}), u * init};
    return {t, std::move(state), false};
  }

  // Maximally entangled A-S input; A is a spectator during the evolution.
  const auto phi = max_entangled(d);
  Vector init = Vector::Zero(static_cast<Eigen::Index>(d) * d * d * d);
  const Eigen::Index block = static_cast<Eigen::Index>(d) * d * d;
  for (int k = 0; k < d; ++k) {
    // |k>_A |k>_S |0>|0>
    init(static_cast<Eigen::Index>(k) * block + static_cast<Eigen::Index>(k) * d * d) =
        phi.vec(static_cast<Eigen::Index>(k) * d + k);
  }
  const Matrix u_full = kron(Matrix::Identity(d, d), u);
  PureState state{
      SystemLayout({{Label::A, d}, {Label::S, d}, {Label::O_A, d}, {Label::O_B, d}}),
      u_full * init};
  return {t, std::move(state), true};
}

// The closed forms below come from the spectral decomposition of the
// relevant subspace: |000> and the symmetric combination of |psi'00>,
// |0psi'0>, |00psi'> carry eigenvalue 2, the combination orthogonal to both
// carries eigenvalue -1. Expanding exp(-itH) over that basis gives, for the
// O_A component amplitudes,
//   c1 = (exp(-2it) + 2 exp(it)) / 3   on |psi'00>,
//   c2 = (exp(-2it) -   exp(it)) / 3   on |0psi'0> and |00psi'>,
// and |c1|^2 + 2|c2|^2 = 1, |c1|^2 + |c2|^2 = (7 + 2cos 3t)/9.

DensityMatrix simul_result_analytic(const PureState& psi, double t) {
  require_system_qudit(psi);
  const int d = static_cast<int>(psi.vec.size());
  const auto s = split_against_ground(psi.vec);
  const SystemLayout layout({{Label::O_A, d}});

  if (s.beta == 0.0) {
    // |psi> = |0> up to phase: nothing evolves, the memory stays in |0>.
    return {layout, basis_projector(d, 0)};
  }

  const Complex phase_2(std::cos(2.0 * t), -std::sin(2.0 * t));   // exp(-2it)
  const Complex phase_m1(std::cos(t), std::sin(t));               // exp(+it)
  const Complex c2 = (phase_2 - phase_m1) / 3.0;

  const double weight = s.beta * s.beta * (7.0 + 2.0 * std::cos(3.0 * t)) / 9.0;
  const Vector psi2 = s.alpha * phase_2 * basis_vec(d, 0) + s.beta * c2 * s.perp;

  Matrix rho = weight * basis_projector(d, 0) + psi2 * psi2.adjoint();
  return {layout, std::move(rho)};
}

DensityMatrix simul_disturbance_analytic(const PureState& psi, double t) {
  require_system_qudit(psi);
  const int d = static_cast<int>(psi.vec.size());
  const auto s = split_against_ground(psi.vec);
  const SystemLayout layout({{Label::S, d}});

  if (s.beta == 0.0) {
    return {layout, basis_projector(d, 0)};
  }

  const Complex phase_2(std::cos(2.0 * t), -std::sin(2.0 * t));
  const Complex phase_m1(std::cos(t), std::sin(t));
  const Complex c1 = (phase_2 + 2.0 * phase_m1) / 3.0;

  const double weight = 2.0 * s.beta * s.beta * (2.0 - 2.0 * std::cos(3.0 * t)) / 9.0;
  const Vector psi3 = s.alpha * phase_2 * basis_vec(d, 0) + s.beta * c1 * s.perp;

  Matrix rho = weight * basis_projector(d, 0) + psi3 * psi3.adjoint();
  return {layout, std::move(rho)};
}

DensityMatrix simul_ancilla_result_analytic(double t) {
  const Complex phase_2(std::cos(2.0 * t), -std::sin(2.0 * t));
  const Complex phase_m1(std::cos(t), std::sin(t));
  const Complex c2 = (phase_2 - phase_m1) / 3.0;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  // Basis |A O_A>: Psi2 lives on |00>, |11>; the mixed remainder sits on |10>.
  Vector psi2 = Vector::Zero(4);
  psi2(0) = inv_sqrt2 * phase_2;
  psi2(3) = inv_sqrt2 * c2;

  Matrix rho = psi2 * psi2.adjoint();
  rho(2, 2) += (7.0 + 2.0 * std::cos(3.0 * t)) / 18.0;
  return {SystemLayout({{Label::A, 2}, {Label::O_A, 2}}), std::move(rho)};
}

std::vector<SweepRecord> simul_sweep(double t_min, double t_max, int steps) {
  if (steps < 2) throw std::invalid_argument("simul_sweep: need at least 2 grid points");
  if (!(t_min < t_max)) throw std::invalid_argument("simul_sweep: t_min must be < t_max");

  const int d = 2;
  const auto eig = herm_eig(simul_hamiltonian(d));
  const auto phi = max_entangled(d);
  Vector init = Vector::Zero(16);
  init(0) = phi.vec(0);   // |0>_A |000>
  init(12) = phi.vec(3);  // |1>_A |100>

  const SystemLayout layout(
      {{Label::A, d}, {Label::S, d}, {Label::O_A, d}, {Label::O_B, d}});
  const double max_bits = 2.0 * heisenberg_limit(d);

  std::vector<SweepRecord> records;
  records.reserve(steps);
  for (int i = 0; i < steps; ++i) {
    const double t = t_min + (t_max - t_min) * static_cast<double>(i) / (steps - 1);

    Vector phases(eig.eigenvalues.size());
    for (Eigen::Index k = 0; k < phases.size(); ++k) {
      phases(k) = std::exp(Complex(0.0, -eig.eigenvalues(k) * t));
    }
    const Matrix u = eig.eigenvectors * phases.asDiagonal() * eig.eigenvectors.adjoint();
    const Vector evolved = kron(Matrix::Identity(d, d), u) * init;

    const DensityMatrix rho{layout, evolved * evolved.adjoint()};
    const double info = mutual_information(rho, {Label::A}, {Label::O_A}).value_bits;
    const double back = mutual_information(rho, {Label::A}, {Label::S}).value_bits;

    SweepRecord rec;
    rec.t = t;
    rec.info_gain_bits = info;
    rec.uncertainty_bits = std::clamp(max_bits - info, 0.0, max_bits);
    rec.back_action_bits = std::clamp(max_bits - back, 0.0, max_bits);
    records.push_back(rec);
  }
  return records;
}

MeasurementGadget simul_gadget(int d, double t) {
  if (d < 2) throw std::invalid_argument("simul_gadget: dimension must be >= 2");
  const std::vector<int> dims{d, d, d};
  // S couples to both memories; the one labeled E here is the other
  // observer, whose presence disturbs the measurement.
  const Matrix h = swap_factors(dims, 0, 2) + swap_factors(dims, 0, 1);
  const Matrix chi = kron(basis_projector(d, 0), basis_projector(d, 0));
  return make_gadget(
      SystemLayout({{Label::S, d}, {Label::E, d}, {Label::O, d}}), evolve(h, t),
      make_density(SystemLayout({{Label::E, d}, {Label::O, d}}), chi), "simultaneous-swap", {});
}

DensityMatrix rsp_state(const Matrix& projector, int d) {
  if (projector.rows() != d || projector.cols() != d) {
    throw std::invalid_argument("rsp_state: projector dimension mismatch");
  }
  if (hermiticity_residual(projector) > tol::hermitian) {
    throw std::invalid_argument("rsp_state: projector is not Hermitian");
  }
  if ((projector * projector - projector).norm() > tol::hermitian) {
    throw std::invalid_argument("rsp_state: projector is not idempotent");
  }
  if (std::abs(projector.trace() - Complex(1.0, 0.0)) > tol::trace_one) {
    throw std::invalid_argument("rsp_state: projector must be rank 1");
  }

  const auto phi = densify(max_entangled(d));
  const Matrix selected = kron(projector, Matrix::Identity(d, d)) * phi.mat;
  Matrix rho = static_cast<double>(d) * partial_trace(selected, {d, d}, {1});
  return {SystemLayout({{Label::S, d}}), std::move(rho)};
}

bool theorem1_check(const MeasurementGadget& g) {
  const auto tau_ao = reference_result_state(g);
  const auto tau_a = reduce(tau_ao, {Label::A});
  const auto tau_o = reduce(tau_ao, {Label::O});
  const bool product = trace_distance(tau_ao.mat, kron(tau_a.mat, tau_o.mat)) < tol::state_eq;
  return product == !is_measurement(g);
}

}  // namespace qagent
