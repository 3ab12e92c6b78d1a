#include "qagent/states.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace qagent {

std::string to_string(Label label) {
  switch (label) {
    case Label::A: return "A";
    case Label::S: return "S";
    case Label::E: return "E";
    case Label::O: return "O";
    case Label::O_A: return "O_A";
    case Label::O_B: return "O_B";
  }
  throw std::logic_error("to_string: unknown label");
}

Label label_from_string(const std::string& s) {
  if (s == "A") return Label::A;
  if (s == "S") return Label::S;
  if (s == "E") return Label::E;
  if (s == "O") return Label::O;
  if (s == "O_A") return Label::O_A;
  if (s == "O_B") return Label::O_B;
  throw std::invalid_argument("label_from_string: unknown label '" + s + "'");
}

SystemLayout::SystemLayout(std::vector<Factor> factors) : factors_(std::move(factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].dim < 1) {
      throw std::invalid_argument("SystemLayout: factor dimension must be >= 1");
    }
    for (std::size_t j = i + 1; j < factors_.size(); ++j) {
      if (factors_[i].label == factors_[j].label) {
        throw std::invalid_argument("SystemLayout: duplicate label " + to_string(factors_[i].label));
      }
    }
  }
}

Eigen::Index SystemLayout::total_dim() const {
  Eigen::Index total = 1;
  for (const auto& f : factors_) total *= f.dim;
  return total;
}

std::vector<int> SystemLayout::dims() const {
  std::vector<int> out;
  out.reserve(factors_.size());
  for (const auto& f : factors_) out.push_back(f.dim);
  return out;
}

bool SystemLayout::has(Label label) const {
  for (const auto& f : factors_) {
    if (f.label == label) return true;
  }
  return false;
}

int SystemLayout::index_of(Label label) const {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].label == label) return static_cast<int>(i);
  }
  throw std::invalid_argument("SystemLayout: no factor labeled " + to_string(label));
}

int SystemLayout::dim_of(Label label) const {
  return factors_[index_of(label)].dim;
}

std::vector<int> SystemLayout::indices_of(const std::vector<Label>& labels) const {
  std::vector<int> out;
  out.reserve(labels.size());
  for (Label l : labels) out.push_back(index_of(l));
  std::sort(out.begin(), out.end());
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i] == out[i - 1]) throw std::invalid_argument("SystemLayout: duplicate label in set");
  }
  return out;
}

SystemLayout SystemLayout::subset(const std::vector<int>& keep) const {
  std::vector<int> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Factor> kept;
  kept.reserve(sorted.size());
  for (int i : sorted) {
    if (i < 0 || i >= factor_count()) throw std::invalid_argument("SystemLayout: subset index out of range");
    kept.push_back(factors_[i]);
  }
  return SystemLayout(std::move(kept));
}

ValidationReport validate(const DensityMatrix& rho) {
  ValidationReport report;
  report.hermitian.residual = hermiticity_residual(rho.mat);
  report.hermitian.ok = report.hermitian.residual <= tol::hermitian;

  report.unit_trace.residual = std::abs(rho.mat.trace() - Complex(1.0, 0.0));
  report.unit_trace.ok = report.unit_trace.residual <= tol::trace_one;

  // Eigenvalues of the symmetrized matrix; meaningful even when the
  // Hermiticity check itself failed.
  const Matrix sym = 0.5 * (rho.mat + rho.mat.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  report.positive.residual = solver.eigenvalues().minCoeff();
  report.positive.ok = report.positive.residual >= tol::psd_floor;
  return report;
}

void ensure_valid(const DensityMatrix& rho) {
  if (rho.mat.rows() != rho.mat.cols() || rho.mat.rows() != rho.layout.total_dim()) {
    throw std::invalid_argument("DensityMatrix: matrix dimension does not match layout");
  }
  const auto report = validate(rho);
  if (!report.hermitian.ok) throw std::invalid_argument("DensityMatrix: not Hermitian");
  if (!report.unit_trace.ok) throw std::invalid_argument("DensityMatrix: trace is not 1");
  if (!report.positive.ok) throw std::invalid_argument("DensityMatrix: not positive semidefinite");
}

PureState make_pure(SystemLayout layout, Vector vec) {
  if (vec.size() != layout.total_dim()) {
    throw std::invalid_argument("PureState: vector length does not match layout");
  }
  if (std::abs(vec.norm() - 1.0) > tol::hermitian) {
    throw std::invalid_argument("PureState: vector is not normalized");
  }
  return {std::move(layout), std::move(vec)};
}

DensityMatrix make_density(SystemLayout layout, Matrix mat) {
  DensityMatrix rho{std::move(layout), std::move(mat)};
  ensure_valid(rho);
  return rho;
}

PureState pure_on(Label label, Vector vec) {
  SystemLayout layout({{label, static_cast<int>(vec.size())}});
  return make_pure(std::move(layout), std::move(vec));
}

DensityMatrix density_on(Label label, Matrix mat) {
  SystemLayout layout({{label, static_cast<int>(mat.rows())}});
  return make_density(std::move(layout), std::move(mat));
}

PureState max_entangled(int d) {
  if (d < 2) throw std::invalid_argument("max_entangled: dimension must be >= 2");
  Vector vec = Vector::Zero(static_cast<Eigen::Index>(d) * d);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (int k = 0; k < d; ++k) {
    vec(static_cast<Eigen::Index>(k) * d + k) = amp;
  }
  return {SystemLayout({{Label::A, d}, {Label::S, d}}), std::move(vec)};
}

DensityMatrix densify(const PureState& psi) {
  return {psi.layout, psi.vec * psi.vec.adjoint()};
}

DensityMatrix reduce(const DensityMatrix& rho, const std::vector<Label>& keep) {
  const auto indices = rho.layout.indices_of(keep);
  return {rho.layout.subset(indices), partial_trace(rho.mat, rho.layout.dims(), indices)};
}

double purity(const DensityMatrix& rho) {
  return (rho.mat * rho.mat).trace().real();
}

Vector basis_vec(int d, int k) {
  if (k < 0 || k >= d) throw std::invalid_argument("basis_vec: index out of range");
  Vector v = Vector::Zero(d);
  v(k) = 1.0;
  return v;
}

PureState random_pure(int d, std::uint64_t seed) {
  if (d < 2) throw std::invalid_argument("random_pure: dimension must be >= 2");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector vec(d);
  for (int k = 0; k < d; ++k) {
    vec(k) = Complex(gauss(rng), gauss(rng));
  }
  vec /= vec.norm();
  return {SystemLayout({{Label::S, d}}), std::move(vec)};
}

DensityMatrix random_density(int d, std::uint64_t seed) {
  if (d < 2) throw std::invalid_argument("random_density: dimension must be >= 2");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  // Purification on S (x) qubit ancilla; rho = M M^dag after normalization.
  Matrix m(d, 2);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < 2; ++j) {
      m(i, j) = Complex(gauss(rng), gauss(rng));
    }
  }
  m /= m.norm();
  return {SystemLayout({{Label::S, d}}), m * m.adjoint()};
}

}  // namespace qagent
