#include "qagent/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace qagent {

MetricResult mutual_information(const DensityMatrix& rho, const std::vector<Label>& x,
                                const std::vector<Label>& y) {
  for (Label lx : x) {
    for (Label ly : y) {
      if (lx == ly) throw std::invalid_argument("mutual_information: label sets overlap");
    }
  }
  std::vector<Label> xy = x;
  xy.insert(xy.end(), y.begin(), y.end());

  const double s_x = entropy_bits(reduce(rho, x).mat);
  const double s_y = entropy_bits(reduce(rho, y).mat);
  const double s_xy = entropy_bits(reduce(rho, xy).mat);

  MetricResult r;
  r.value_bits = std::max(0.0, s_x + s_y - s_xy);
  r.components = {{"S_X", s_x}, {"S_Y", s_y}, {"S_XY", s_xy}};
  return r;
}

DensityMatrix reference_output(const MeasurementGadget& g) {
  const int d = g.dim_s();
  const auto phi = densify(max_entangled(d));
  // Factor order A, S, E, O: the entangled pair occupies the first two slots.
  const Matrix init = kron(phi.mat, g.chi.mat);
  const Matrix u_full = kron(Matrix::Identity(d, d), g.u);

  SystemLayout layout({{Label::A, d},
                       {Label::S, d},
                       {Label::E, g.dim_e()},
                       {Label::O, g.dim_o()}});
  return {std::move(layout), u_full * init * u_full.adjoint()};
}

DensityMatrix reference_result_state(const MeasurementGadget& g) {
  return reduce(reference_output(g), {Label::A, Label::O});
}

DensityMatrix reference_system_state(const MeasurementGadget& g) {
  return reduce(reference_output(g), {Label::A, Label::S});
}

namespace {

MetricResult max_info_shortfall(const DensityMatrix& tau, Label partner, int d) {
  const auto mi = mutual_information(tau, {Label::A}, {partner});
  MetricResult r;
  r.value_bits = std::max(0.0, 2.0 * std::log2(static_cast<double>(d)) - mi.value_bits);
  r.components = mi.components;
  return r;
}

}  // namespace

MetricResult uncertainty(const MeasurementGadget& g) {
  return max_info_shortfall(reference_result_state(g), Label::O, g.dim_s());
}

MetricResult back_action(const MeasurementGadget& g) {
  return max_info_shortfall(reference_system_state(g), Label::S, g.dim_s());
}

double heisenberg_limit(int d) {
  if (d < 2) throw std::invalid_argument("heisenberg_limit: dimension must be >= 2");
  return std::log2(static_cast<double>(d));
}

bool is_maximally_informative(const MeasurementGadget& g) {
  return uncertainty(g).value_bits < tol::state_eq;
}

bool is_maximally_disturbing(const MeasurementGadget& g) {
  const auto probes = probe_states(g.dim_s());
  const auto first = disturbance_channel(g, probes.front());
  for (std::size_t i = 1; i < probes.size(); ++i) {
    if (trace_distance(disturbance_channel(g, probes[i]).mat, first.mat) > tol::state_eq) {
      return false;
    }
  }
  return true;
}

std::vector<Matrix> random_kraus_channel(int dim_in, int dim_out, int n_env,
                                         std::uint64_t seed) {
  if (dim_in < 1 || dim_out < 1 || n_env < 1) {
    throw std::invalid_argument("random_kraus_channel: dimensions must be >= 1");
  }
  // Haar random isometry: first dim_in columns of a random unitary on
  // dim_out * n_env, split row-wise into Kraus blocks.
  const int lifted = dim_out * n_env;
  if (lifted < dim_in) {
    throw std::invalid_argument("random_kraus_channel: dim_out * n_env must be >= dim_in");
  }
  const Matrix v = random_unitary(lifted, seed).leftCols(dim_in);
  std::vector<Matrix> kraus;
  kraus.reserve(n_env);
  for (int e = 0; e < n_env; ++e) {
    Matrix k(dim_out, dim_in);
    for (int a = 0; a < dim_out; ++a) {
      k.row(a) = v.row(static_cast<Eigen::Index>(a) * n_env + e);
    }
    kraus.push_back(std::move(k));
  }
  return kraus;
}

DensityMatrix apply_channel_on(const DensityMatrix& rho, Label target,
                               const std::vector<Matrix>& kraus) {
  if (kraus.empty()) throw std::invalid_argument("apply_channel_on: no Kraus operators");
  const int idx = rho.layout.index_of(target);
  const auto& factors = rho.layout.factors();
  const int dim_in = factors[idx].dim;
  const int dim_out = static_cast<int>(kraus.front().rows());

  Matrix completeness = Matrix::Zero(dim_in, dim_in);
  for (const auto& k : kraus) {
    if (k.rows() != dim_out || k.cols() != dim_in) {
      throw std::invalid_argument("apply_channel_on: inconsistent Kraus dimensions");
    }
    completeness += k.adjoint() * k;
  }
  if ((completeness - Matrix::Identity(dim_in, dim_in)).norm() > tol::unitary) {
    throw std::invalid_argument("apply_channel_on: Kraus operators are not trace preserving");
  }

  Eigen::Index left = 1, right = 1;
  for (int f = 0; f < idx; ++f) left *= factors[f].dim;
  for (int f = idx + 1; f < rho.layout.factor_count(); ++f) right *= factors[f].dim;
  const Matrix eye_left = Matrix::Identity(left, left);
  const Matrix eye_right = Matrix::Identity(right, right);

  const Eigen::Index out_dim = left * dim_out * right;
  Matrix out = Matrix::Zero(out_dim, out_dim);
  for (const auto& k : kraus) {
    const Matrix lifted = kron(eye_left, kron(k, eye_right));
    out += lifted * rho.mat * lifted.adjoint();
  }

  std::vector<Factor> new_factors = factors;
  new_factors[idx].dim = dim_out;
  return {SystemLayout(std::move(new_factors)), std::move(out)};
}

}  // namespace qagent
