#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <span>

namespace majeur::linalg {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Rejects empty matrices and non-finite entries with invalid_input.
void check_finite(const Matrix& m);

bool is_unitary(const Matrix& m, double tolerance);
bool is_hermitian(const Matrix& m, double tolerance);

/// Singular values sorted non-increasing; length min(rows, cols).
RealVector singular_values(const Matrix& m);

/// Operator norm. Cheaper than a full SVD: reduces to the largest
/// eigenvalue of the Gram matrix on the smaller side, with closed forms
/// for sides 1..3.
double operator_norm(const Matrix& m);

/// Eigenvalues of a Hermitian matrix sorted non-increasing. Inputs farther
/// than `hermiticity` from self-adjoint fail with contract_violation.
RealVector hermitian_eigenvalues(const Matrix& m);

/// Haar-distributed n x n unitary: QR of a complex Ginibre matrix with the
/// triangular factor's diagonal phases absorbed into Q. Deterministic per
/// seed.
Matrix haar_unitary(Index n, std::uint64_t seed);

/// Copy of the intersection of the given rows and columns. Index sets must
/// be non-empty, strictly increasing and in range.
Matrix submatrix(const Matrix& m, std::span<const Index> rows,
                 std::span<const Index> cols);

} // namespace majeur::linalg
