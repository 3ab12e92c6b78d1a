#include "qagent/linalg.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <unsupported/Eigen/KroneckerProduct>

namespace qagent {

Matrix kron(const Matrix& a, const Matrix& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

Matrix kron_all(const std::vector<Matrix>& factors) {
  if (factors.empty()) {
    return Matrix::Identity(1, 1);
  }
  Matrix out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) {
    out = kron(out, factors[i]);
  }
  return out;
}

namespace {

// Row-major strides for a multi-factor index: index = sum_f digit_f * stride_f.
std::vector<Eigen::Index> strides_of(const std::vector<int>& dims) {
  std::vector<Eigen::Index> strides(dims.size(), 1);
  for (int f = static_cast<int>(dims.size()) - 2; f >= 0; --f) {
    strides[f] = strides[f + 1] * dims[f + 1];
  }
  return strides;
}

// Full-space offsets for every linear index over a subset of the factors.
std::vector<Eigen::Index> subset_offsets(const std::vector<int>& dims,
                                         const std::vector<int>& subset) {
  const auto strides = strides_of(dims);
  Eigen::Index count = 1;
  for (int f : subset) count *= dims[f];
  std::vector<Eigen::Index> offsets(count, 0);
  for (Eigen::Index lin = 0; lin < count; ++lin) {
    Eigen::Index rest = lin;
    Eigen::Index offset = 0;
    for (int p = static_cast<int>(subset.size()) - 1; p >= 0; --p) {
      const int f = subset[p];
      offset += (rest % dims[f]) * strides[f];
      rest /= dims[f];
    }
    offsets[lin] = offset;
  }
  return offsets;
}

}  // namespace

Matrix partial_trace(const Matrix& m, const std::vector<int>& dims,
                     const std::vector<int>& keep) {
  Eigen::Index total = 1;
  for (int d : dims) {
    if (d < 1) throw std::invalid_argument("partial_trace: factor dims must be >= 1");
    total *= d;
  }
  if (m.rows() != m.cols() || m.rows() != total) {
    throw std::invalid_argument("partial_trace: product of dims does not match matrix dimension");
  }

  std::vector<bool> kept(dims.size(), false);
  for (int f : keep) {
    if (f < 0 || f >= static_cast<int>(dims.size())) {
      throw std::invalid_argument("partial_trace: keep index out of range");
    }
    if (kept[f]) throw std::invalid_argument("partial_trace: duplicate keep index");
    kept[f] = true;
  }

  std::vector<int> keep_sorted, traced;
  for (int f = 0; f < static_cast<int>(dims.size()); ++f) {
    (kept[f] ? keep_sorted : traced).push_back(f);
  }

  const auto keep_offsets = subset_offsets(dims, keep_sorted);
  const auto trace_offsets = subset_offsets(dims, traced);
  const auto dk = static_cast<Eigen::Index>(keep_offsets.size());

  Matrix out = Matrix::Zero(dk, dk);
  for (Eigen::Index r = 0; r < dk; ++r) {
    for (Eigen::Index c = 0; c < dk; ++c) {
      Complex sum = 0.0;
      for (const auto t : trace_offsets) {
        sum += m(keep_offsets[r] + t, keep_offsets[c] + t);
      }
      out(r, c) = sum;
    }
  }
  return out;
}

EigenDecomposition herm_eig(const Matrix& h) {
  if (h.rows() != h.cols()) {
    throw std::invalid_argument("herm_eig: matrix must be square");
  }
  if (hermiticity_residual(h) > tol::hermitian) {
    throw std::invalid_argument("herm_eig: matrix is not Hermitian");
  }
  // Symmetrize before solving so the decomposition is exactly Hermitian.
  const Matrix sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("herm_eig: eigensolver failed to converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Matrix evolve(const Matrix& h, double t) {
  const auto eig = herm_eig(h);
  Vector phases(eig.eigenvalues.size());
  for (Eigen::Index k = 0; k < phases.size(); ++k) {
    phases(k) = std::exp(Complex(0.0, -eig.eigenvalues(k) * t));
  }
  return eig.eigenvectors * phases.asDiagonal() * eig.eigenvectors.adjoint();
}

double entropy_bits(const Matrix& rho) {
  const auto eig = herm_eig(rho);  // rejects non-Hermitian input
  const double trace = eig.eigenvalues.sum();
  if (std::abs(trace - 1.0) > tol::trace_one) {
    throw std::invalid_argument("entropy_bits: density matrix trace is not 1");
  }
  if (eig.eigenvalues.minCoeff() < tol::psd_floor) {
    throw std::invalid_argument("entropy_bits: density matrix is not positive semidefinite");
  }
  double bits = 0.0;
  for (Eigen::Index k = 0; k < eig.eigenvalues.size(); ++k) {
    const double lambda = eig.eigenvalues(k);
    if (lambda > tol::entropy_clip) {
      bits -= lambda * std::log2(lambda);
    }
  }
  // An eigenvalue of 1 + O(eps) would otherwise leak a negative result.
  return std::max(0.0, bits);
}

double trace_distance(const Matrix& a, const Matrix& b) {
  const Matrix diff = a - b;
  const Matrix sym = 0.5 * (diff + diff.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

double hermiticity_residual(const Matrix& m) {
  return (m - m.adjoint()).norm();
}

double unitarity_residual(const Matrix& u) {
  return (u * u.adjoint() - Matrix::Identity(u.rows(), u.rows())).norm();
}

Matrix random_unitary(int d, std::uint64_t seed) {
  if (d < 1) throw std::invalid_argument("random_unitary: dimension must be >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      g(i, j) = Complex(gauss(rng), gauss(rng));
    }
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase ambiguity of QR so the distribution is Haar.
  for (int j = 0; j < d; ++j) {
    const Complex rjj = r(j, j);
    const double mag = std::abs(rjj);
    q.col(j) *= (mag > 0.0) ? rjj / mag : Complex(1.0, 0.0);
  }
  return q;
}

Matrix basis_projector(int d, int k) {
  if (k < 0 || k >= d) throw std::invalid_argument("basis_projector: index out of range");
  Matrix p = Matrix::Zero(d, d);
  p(k, k) = 1.0;
  return p;
}

Matrix shift_matrix(int d) {
  Matrix s = Matrix::Zero(d, d);
  for (int j = 0; j < d; ++j) {
    s((j + 1) % d, j) = 1.0;
  }
  return s;
}

Matrix swap_factors(const std::vector<int>& dims, int i, int j) {
  const int n = static_cast<int>(dims.size());
  if (i < 0 || j < 0 || i >= n || j >= n || i == j) {
    throw std::invalid_argument("swap_factors: bad factor indices");
  }
  if (dims[i] != dims[j]) {
    throw std::invalid_argument("swap_factors: factors must have equal dimension");
  }
  const auto strides = strides_of(dims);
  Eigen::Index total = 1;
  for (int d : dims) total *= d;

  Matrix out = Matrix::Zero(total, total);
  for (Eigen::Index col = 0; col < total; ++col) {
    const Eigen::Index di = (col / strides[i]) % dims[i];
    const Eigen::Index dj = (col / strides[j]) % dims[j];
    const Eigen::Index row = col + (dj - di) * strides[i] + (di - dj) * strides[j];
    out(row, col) = 1.0;
  }
  return out;
}

Matrix controlled_shift(const std::vector<int>& dims, int control, int target) {
  const int n = static_cast<int>(dims.size());
  if (control < 0 || target < 0 || control >= n || target >= n || control == target) {
    throw std::invalid_argument("controlled_shift: bad factor indices");
  }
  const auto strides = strides_of(dims);
  Eigen::Index total = 1;
  for (int d : dims) total *= d;

  Matrix out = Matrix::Zero(total, total);
  for (Eigen::Index col = 0; col < total; ++col) {
    const Eigen::Index c = (col / strides[control]) % dims[control];
    const Eigen::Index t = (col / strides[target]) % dims[target];
    const Eigen::Index shifted = (t + c) % dims[target];
    const Eigen::Index row = col + (shifted - t) * strides[target];
    out(row, col) = 1.0;
  }
  return out;
}

}  // namespace qagent
