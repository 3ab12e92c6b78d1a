// linalg.hpp
// Dense complex linear algebra primitives: tensor products, partial trace,
// Hermitian eigendecomposition, unitary evolution, entropy.
//
// All operations are pure functions on value types, safe to call
// concurrently. Dense double-precision storage throughout; total
// dimensions stay below ~64.

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace qagent {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

namespace tol {
// Numerical tolerances used across the library.
inline constexpr double hermitian = 1e-10;
inline constexpr double unitary = 1e-10;
inline constexpr double trace_one = 1e-9;
inline constexpr double psd_floor = -1e-9;
inline constexpr double entropy_clip = 1e-12;
inline constexpr double state_eq = 1e-9;  // trace-distance equality threshold
}  // namespace tol

// Result of diagonalizing a Hermitian matrix. Eigenvalues ascending,
// eigenvector columns orthonormal, input == vectors * diag(values) * vectors^dag.
struct EigenDecomposition {
  Eigen::VectorXd eigenvalues;
  Matrix eigenvectors;
};

// Kronecker (tensor) product, row-major index convention:
// out[(i1*b.rows+i2),(j1*b.cols+j2)] = a(i1,j1) * b(i2,j2).
Matrix kron(const Matrix& a, const Matrix& b);

// Tensor product of a list of operators, left factor most significant.
Matrix kron_all(const std::vector<Matrix>& factors);

// Partial trace of a square matrix over the factors NOT listed in `keep`.
// `dims` are the tensor-factor dimensions (their product must equal the
// matrix dimension); `keep` holds factor indices, order-insensitive, and the
// kept factors retain their original relative order in the output.
Matrix partial_trace(const Matrix& m, const std::vector<int>& dims,
                     const std::vector<int>& keep);

// Diagonalize a Hermitian matrix. Throws std::invalid_argument if
// ||h - h^dag||_F exceeds the Hermiticity tolerance.
EigenDecomposition herm_eig(const Matrix& h);

// exp(-i h t) for Hermitian h, computed through the eigendecomposition.
// Exact on the eigenbasis, unitary to roundoff.
Matrix evolve(const Matrix& h, double t);

// Von Neumann entropy in bits: -sum_k lambda_k log2 lambda_k over eigenvalues
// above the clipping threshold. Throws if rho is not a valid density matrix.
double entropy_bits(const Matrix& rho);

// Trace distance (1/2)||a - b||_1 between Hermitian matrices.
double trace_distance(const Matrix& a, const Matrix& b);

// Frobenius-norm Hermiticity residual ||m - m^dag||_F.
double hermiticity_residual(const Matrix& m);

// Frobenius-norm unitarity residual ||u u^dag - I||_F.
double unitarity_residual(const Matrix& u);

// Haar-distributed random unitary (QR of a complex Gaussian matrix with the
// phase correction on R's diagonal). Deterministic per seed.
Matrix random_unitary(int d, std::uint64_t seed);

// ---- small operator constructors used by the measurement builders ----

// |k><k| basis projector in dimension d.
Matrix basis_projector(int d, int k);

// Cyclic shift on dimension d: |j> -> |j+1 mod d>.
Matrix shift_matrix(int d);

// SWAP between two equal-dimension factors of a multi-factor space.
Matrix swap_factors(const std::vector<int>& dims, int i, int j);

// Controlled cyclic shift: sum_k |k><k|_control (x) Shift^k_target, embedded
// in the multi-factor space described by dims.
Matrix controlled_shift(const std::vector<int>& dims, int control, int target);

}  // namespace qagent
