#include "linalg.hpp"

#include "error.hpp"
#include "tolerances.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <random>

namespace majeur::linalg {

void check_finite(const Matrix& m) {
    if (m.rows() < 1 || m.cols() < 1) {
        raise(ErrorCode::invalid_input, "matrix must have at least one row and column");
    }
    if (!m.allFinite()) {
        raise(ErrorCode::invalid_input, "matrix has non-finite entries");
    }
}

bool is_unitary(const Matrix& m, double tolerance) {
    if (m.rows() != m.cols()) {
        return false;
    }
    const Matrix gram = m.adjoint() * m;
    const Matrix id = Matrix::Identity(m.rows(), m.cols());
    return (gram - id).cwiseAbs().maxCoeff() <= tolerance;
}

bool is_hermitian(const Matrix& m, double tolerance) {
    if (m.rows() != m.cols()) {
        return false;
    }
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tolerance;
}

RealVector singular_values(const Matrix& m) {
    check_finite(m);
    Eigen::JacobiSVD<Matrix> svd(m);
    return svd.singularValues();
}

namespace {

// Largest eigenvalue of a Hermitian matrix of side <= 3 in closed form;
// falls back to the iterative solver above that.
double hermitian_max_eigenvalue(const Matrix& g) {
    const Index n = g.rows();
    if (n == 1) {
        return g(0, 0).real();
    }
    if (n == 2) {
        const double a = g(0, 0).real();
        const double d = g(1, 1).real();
        const double mid = 0.5 * (a + d);
        const double off = std::abs(g(0, 1));
        const double rad = std::hypot(0.5 * (a - d), off);
        return mid + rad;
    }
    if (n == 3) {
        const double p1 = std::norm(g(0, 1)) + std::norm(g(0, 2)) + std::norm(g(1, 2));
        const double q = g.trace().real() / 3.0;
        if (p1 == 0.0) {
            return std::max({g(0, 0).real(), g(1, 1).real(), g(2, 2).real()});
        }
        const double d0 = g(0, 0).real() - q;
        const double d1 = g(1, 1).real() - q;
        const double d2 = g(2, 2).real() - q;
        const double p2 = d0 * d0 + d1 * d1 + d2 * d2 + 2.0 * p1;
        const double p = std::sqrt(p2 / 6.0);
        Matrix b = (g - q * Matrix::Identity(3, 3)) / p;
        double r = b.determinant().real() / 2.0;
        r = std::clamp(r, -1.0, 1.0);
        const double phi = std::acos(r) / 3.0;
        return q + 2.0 * p * std::cos(phi);
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(g, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().maxCoeff();
}

} // namespace

double operator_norm(const Matrix& m) {
    check_finite(m);
    if (m.rows() == 1 || m.cols() == 1) {
        return m.norm();
    }
    Matrix gram;
    if (m.rows() <= m.cols()) {
        gram = m * m.adjoint();
    } else {
        gram = m.adjoint() * m;
    }
    return std::sqrt(std::max(0.0, hermitian_max_eigenvalue(gram)));
}

RealVector hermitian_eigenvalues(const Matrix& m) {
    check_finite(m);
    if (m.rows() != m.cols()) {
        raise(ErrorCode::invalid_input, "eigenvalues require a square matrix");
    }
    if (!is_hermitian(m, tolerances().hermiticity)) {
        raise(ErrorCode::contract_violation, "matrix is not Hermitian within tolerance");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver((m + m.adjoint()) / 2.0,
                                                 Eigen::EigenvaluesOnly);
    return solver.eigenvalues().reverse();
}

Matrix haar_unitary(Index n, std::uint64_t seed) {
    if (n < 1) {
        raise(ErrorCode::invalid_input, "unitary dimension must be positive");
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix ginibre(n, n);
    for (Index r = 0; r < n; ++r) {
        for (Index c = 0; c < n; ++c) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            ginibre(r, c) = Complex(re, im);
        }
    }
    Eigen::HouseholderQR<Matrix> qr(ginibre);
    Matrix q = qr.householderQ();
    // Fixing the phases of R's diagonal makes the factorization unique and
    // the resulting Q exactly Haar distributed.
    const auto diag = qr.matrixQR().diagonal();
    for (Index j = 0; j < n; ++j) {
        const double mag = std::abs(diag(j));
        const Complex phase = mag > 0.0 ? diag(j) / mag : Complex(1.0, 0.0);
        q.col(j) *= phase;
    }
    return q;
}

Matrix submatrix(const Matrix& m, std::span<const Index> rows,
                 std::span<const Index> cols) {
    check_finite(m);
    auto check_indices = [](std::span<const Index> idx, Index limit, const char* what) {
        if (idx.empty()) {
            raise(ErrorCode::invalid_input, std::string(what) + " index set is empty");
        }
        Index prev = -1;
        for (const Index i : idx) {
            if (i < 0 || i >= limit) {
                raise(ErrorCode::invalid_input, std::string(what) + " index out of range");
            }
            if (i <= prev) {
                raise(ErrorCode::invalid_input,
                      std::string(what) + " indices must be strictly increasing");
            }
            prev = i;
        }
    };
    check_indices(rows, m.rows(), "row");
    check_indices(cols, m.cols(), "column");

    Matrix out(static_cast<Index>(rows.size()), static_cast<Index>(cols.size()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
            out(static_cast<Index>(r), static_cast<Index>(c)) = m(rows[r], cols[c]);
        }
    }
    return out;
}

} // namespace majeur::linalg
