// states.hpp
// Density matrices and pure states bound to labeled layouts, plus the
// canonical constructors (maximally entangled pairs, seeded random states).

#pragma once

#include <cstdint>

#include "qagent/layout.hpp"
#include "qagent/linalg.hpp"

namespace qagent {

struct PureState {
  SystemLayout layout;
  Vector vec;  // length layout.total_dim(), unit norm
};

struct DensityMatrix {
  SystemLayout layout;
  Matrix mat;  // total_dim x total_dim; Hermitian, unit trace, PSD
};

struct CheckItem {
  bool ok = false;
  double residual = 0.0;
};

struct ValidationReport {
  CheckItem hermitian;   // residual: ||m - m^dag||_F, tolerance 1e-10
  CheckItem unit_trace;  // residual: |tr(m) - 1|, tolerance 1e-9
  CheckItem positive;    // residual: min eigenvalue, floor -1e-9
  bool all_ok() const { return hermitian.ok && unit_trace.ok && positive.ok; }
};

// Measure every density-matrix invariant and report pass/fail per item.
// Never throws; callers that need a hard failure use ensure_valid.
ValidationReport validate(const DensityMatrix& rho);

// Throws std::invalid_argument with the first failed invariant.
void ensure_valid(const DensityMatrix& rho);

// Checked constructors.
PureState make_pure(SystemLayout layout, Vector vec);
DensityMatrix make_density(SystemLayout layout, Matrix mat);

// Single-factor convenience wrappers.
PureState pure_on(Label label, Vector vec);
DensityMatrix density_on(Label label, Matrix mat);

// (1/sqrt(d)) sum_k |k>|k> on layout (A:d, S:d).
PureState max_entangled(int d);

// Outer product |psi><psi| on the same layout.
DensityMatrix densify(const PureState& psi);

// Partial trace down to the given labels (kept in layout order).
DensityMatrix reduce(const DensityMatrix& rho, const std::vector<Label>& keep);

// tr(rho^2).
double purity(const DensityMatrix& rho);

// Haar-distributed pure state on (S:d): normalized complex Gaussian vector.
// Deterministic per seed.
PureState random_pure(int d, std::uint64_t seed);

// Random density matrix on (S:d), obtained by tracing a qubit ancilla out of
// a random pure state of dimension 2d. Deterministic per seed.
DensityMatrix random_density(int d, std::uint64_t seed);

// Computational basis vector |k> in dimension d.
Vector basis_vec(int d, int k);

}  // namespace qagent
