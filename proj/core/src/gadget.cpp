#include "qagent/gadget.hpp"

#include <cmath>
#include <stdexcept>

#include "qagent/metrics.hpp"

namespace qagent {

namespace {

DensityMatrix chi_on_eo(int dim_e, int dim_o, Matrix mat) {
  return make_density(SystemLayout({{Label::E, dim_e}, {Label::O, dim_o}}), std::move(mat));
}

Matrix ground_projector(int d) {
  return basis_projector(d, 0);
}

}  // namespace

MeasurementGadget make_gadget(SystemLayout layout, Matrix u, DensityMatrix chi,
                              std::string name, std::map<std::string, std::string> flags) {
  if (layout.factor_count() != 3 || layout.factors()[0].label != Label::S ||
      layout.factors()[1].label != Label::E || layout.factors()[2].label != Label::O) {
    throw std::invalid_argument("make_gadget: layout must be S, E, O in that order");
  }
  if (u.rows() != u.cols() || u.rows() != layout.total_dim()) {
    throw std::invalid_argument("make_gadget: unitary dimension does not match layout");
  }
  if (unitarity_residual(u) > tol::unitary) {
    throw std::invalid_argument("make_gadget: u is not unitary");
  }
  const Eigen::Index dim_eo =
      static_cast<Eigen::Index>(layout.dim_of(Label::E)) * layout.dim_of(Label::O);
  if (chi.mat.rows() != dim_eo) {
    throw std::invalid_argument("make_gadget: chi dimension does not match E (x) O");
  }
  ensure_valid(chi);
  return {std::move(layout), std::move(u), std::move(chi), std::move(name), std::move(flags)};
}

MeasurementGadget make_von_neumann(const std::vector<Matrix>& projectors) {
  if (projectors.empty()) throw std::invalid_argument("make_von_neumann: no projectors");
  const int d = static_cast<int>(projectors.front().rows());
  const int k_count = static_cast<int>(projectors.size());

  Matrix sum = Matrix::Zero(d, d);
  for (const auto& p : projectors) {
    if (p.rows() != d || p.cols() != d) {
      throw std::invalid_argument("make_von_neumann: projectors must share one dimension");
    }
    if (hermiticity_residual(p) > tol::hermitian) {
      throw std::invalid_argument("make_von_neumann: projector is not Hermitian");
    }
    if ((p * p - p).norm() > tol::hermitian) {
      throw std::invalid_argument("make_von_neumann: projector is not idempotent");
    }
    sum += p;
  }
  for (std::size_t i = 0; i < projectors.size(); ++i) {
    for (std::size_t j = i + 1; j < projectors.size(); ++j) {
      if ((projectors[i] * projectors[j]).norm() > tol::hermitian) {
        throw std::invalid_argument("make_von_neumann: projectors are not mutually orthogonal");
      }
    }
  }
  if ((sum - Matrix::Identity(d, d)).norm() > tol::hermitian) {
    throw std::invalid_argument("make_von_neumann: projectors do not sum to the identity");
  }

  // Stage one writes the outcome index into the environment, stage two
  // copies it into the memory; both are controlled cyclic shifts.
  const Matrix shift_e = shift_matrix(k_count);
  Matrix w_se = Matrix::Zero(static_cast<Eigen::Index>(d) * k_count,
                             static_cast<Eigen::Index>(d) * k_count);
  Matrix shift_pow = Matrix::Identity(k_count, k_count);
  for (int k = 0; k < k_count; ++k) {
    w_se += kron(projectors[k], shift_pow);
    shift_pow = shift_e * shift_pow;
  }
  const Matrix v_eo = controlled_shift({k_count, k_count}, 0, 1);

  const Matrix u = kron(Matrix::Identity(d, d), v_eo) * kron(w_se, Matrix::Identity(k_count, k_count));
  const Matrix chi = kron(ground_projector(k_count), ground_projector(k_count));

  return make_gadget(SystemLayout({{Label::S, d}, {Label::E, k_count}, {Label::O, k_count}}),
                     u, chi_on_eo(k_count, k_count, chi), "von-neumann",
                     {{"broadcastable", "yes"},
                      {"motility", "yes"},
                      {"reversibility", "requires environment"}});
}

MeasurementGadget make_swap(int d) {
  if (d < 2) throw std::invalid_argument("make_swap: dimension must be >= 2");
  const Matrix u = swap_factors({d, d}, 0, 1);
  return make_gadget(SystemLayout({{Label::S, d}, {Label::E, 1}, {Label::O, d}}),
                     u, chi_on_eo(1, d, ground_projector(d)), "swap",
                     {{"broadcastable", "no"},
                      {"motility", "no"},
                      {"reversibility", "yes"}});
}

MeasurementGadget make_partial_swap(int d, double t) {
  if (d < 2) throw std::invalid_argument("make_partial_swap: dimension must be >= 2");
  const Matrix u = evolve(swap_factors({d, d}, 0, 1), t);
  return make_gadget(SystemLayout({{Label::S, d}, {Label::E, 1}, {Label::O, d}}),
                     u, chi_on_eo(1, d, ground_projector(d)), "partial-swap", {});
}

MeasurementGadget make_dephased_swap(int d) {
  if (d < 2) throw std::invalid_argument("make_dephased_swap: dimension must be >= 2");
  const std::vector<int> dims{d, d, d};
  // Swap system and memory, then copy the memory's basis index into the
  // environment; tracing the environment leaves the memory dephased.
  const Matrix u = controlled_shift(dims, 2, 1) * swap_factors(dims, 0, 2);
  const Matrix chi = kron(ground_projector(d), ground_projector(d));
  return make_gadget(SystemLayout({{Label::S, d}, {Label::E, d}, {Label::O, d}}),
                     u, chi_on_eo(d, d, chi), "dephased-swap",
                     {{"broadcastable", "yes"},
                      {"motility", "yes"},
                      {"reversibility", "requires environment"}});
}

MeasurementGadget random_gadget(int dim_s, int dim_e, int dim_o, std::uint64_t seed) {
  const Eigen::Index total = static_cast<Eigen::Index>(dim_s) * dim_e * dim_o;
  const Matrix u = random_unitary(static_cast<int>(total), seed);
  const int dim_eo = dim_e * dim_o;
  Matrix chi;
  if (dim_eo == 1) {
    chi = Matrix::Identity(1, 1);
  } else {
    chi = random_density(dim_eo, seed ^ 0x9e3779b97f4a7c15ull).mat;
  }
  return make_gadget(SystemLayout({{Label::S, dim_s}, {Label::E, dim_e}, {Label::O, dim_o}}),
                     u, chi_on_eo(dim_e, dim_o, chi), "random", {});
}

DensityMatrix apply(const MeasurementGadget& g, const DensityMatrix& rho_s) {
  if (rho_s.mat.rows() != g.dim_s()) {
    throw std::invalid_argument("apply: system state dimension does not match gadget");
  }
  const Matrix joint = kron(rho_s.mat, g.chi.mat);
  return {g.layout, g.u * joint * g.u.adjoint()};
}

DensityMatrix result_channel(const MeasurementGadget& g, const DensityMatrix& rho_s) {
  return reduce(apply(g, rho_s), {Label::O});
}

DensityMatrix disturbance_channel(const MeasurementGadget& g, const DensityMatrix& rho_s) {
  return reduce(apply(g, rho_s), {Label::S});
}

std::vector<DensityMatrix> probe_states(int d) {
  std::vector<DensityMatrix> probes;
  probes.reserve(static_cast<std::size_t>(d) * d);
  const SystemLayout layout({{Label::S, d}});
  for (int j = 0; j < d; ++j) {
    probes.push_back({layout, basis_projector(d, j)});
  }
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      Vector plus = Vector::Zero(d);
      plus(j) = inv_sqrt2;
      plus(k) = inv_sqrt2;
      probes.push_back({layout, plus * plus.adjoint()});

      Vector plus_i = Vector::Zero(d);
      plus_i(j) = inv_sqrt2;
      plus_i(k) = Complex(0.0, inv_sqrt2);
      probes.push_back({layout, plus_i * plus_i.adjoint()});
    }
  }
  return probes;
}

bool is_measurement(const MeasurementGadget& g) {
  const auto tau_ao = reference_result_state(g);
  return mutual_information(tau_ao, {Label::A}, {Label::O}).value_bits > tol::state_eq;
}

bool is_measurement_by_probes(const MeasurementGadget& g) {
  const auto probes = probe_states(g.dim_s());
  const auto first = result_channel(g, probes.front());
  for (std::size_t i = 1; i < probes.size(); ++i) {
    if (trace_distance(result_channel(g, probes[i]).mat, first.mat) > tol::state_eq) {
      return true;
    }
  }
  return false;
}

bool is_repeatable(const MeasurementGadget& g) {
  for (const auto& probe : probe_states(g.dim_s())) {
    const auto once = result_channel(g, probe);
    const auto twice = result_channel(g, disturbance_channel(g, probe));
    if (trace_distance(once.mat, twice.mat) > tol::state_eq) {
      return false;
    }
  }
  return true;
}

GadgetReport report(const MeasurementGadget& g) {
  GadgetReport r;
  r.is_measurement = is_measurement(g);
  r.uncertainty_bits = uncertainty(g).value_bits;
  r.back_action_bits = back_action(g).value_bits;
  r.repeatable = is_repeatable(g);
  r.flags = g.flags;
  return r;
}

}  // namespace qagent
