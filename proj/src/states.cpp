#include "states.hpp"

#include "error.hpp"
#include "tolerances.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>

namespace majeur::states {

Spectrum::Spectrum(std::vector<double> values, bool renormalize)
    : values_(std::move(values)) {
    if (values_.empty()) {
        raise(ErrorCode::invalid_input, "spectrum must be non-empty");
    }
    for (double& v : values_) {
        if (!std::isfinite(v)) {
            raise(ErrorCode::invalid_input, "spectrum has non-finite entries");
        }
        if (v < -1e-12) {
            raise(ErrorCode::invalid_input, "spectrum entry below -1e-12");
        }
        if (v < 0.0) {
            v = 0.0;
        }
    }
    const double sum = std::accumulate(values_.begin(), values_.end(), 0.0);
    if (std::abs(sum - 1.0) > tolerances().normalization) {
        if (renormalize && std::abs(sum - 1.0) <= 1e-6 && sum > 0.0) {
            for (double& v : values_) {
                v /= sum;
            }
        } else {
            raise(ErrorCode::invalid_input, "spectrum does not sum to one");
        }
    }
    std::stable_sort(values_.begin(), values_.end(), std::greater<double>());
}

Spectrum Spectrum::pure(std::size_t n) {
    std::vector<double> v(n, 0.0);
    v.at(0) = 1.0;
    return Spectrum(std::move(v));
}

Spectrum Spectrum::uniform(std::size_t n) {
    if (n == 0) {
        raise(ErrorCode::invalid_input, "spectrum must be non-empty");
    }
    return Spectrum(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

DensityMatrix::DensityMatrix(linalg::Matrix m) : mat_(std::move(m)) {
    linalg::check_finite(mat_);
    if (mat_.rows() != mat_.cols()) {
        raise(ErrorCode::invalid_input, "density matrix must be square");
    }
    if (!linalg::is_hermitian(mat_, tolerances().hermiticity)) {
        raise(ErrorCode::invalid_input, "density matrix is not Hermitian within tolerance");
    }
    if (std::abs(mat_.trace().real() - 1.0) > tolerances().normalization ||
        std::abs(mat_.trace().imag()) > tolerances().normalization) {
        raise(ErrorCode::invalid_input, "density matrix trace is not one");
    }
    Eigen::SelfAdjointEigenSolver<linalg::Matrix> solver(mat_, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -1e-9) {
        raise(ErrorCode::invalid_input, "density matrix has an eigenvalue below -1e-9");
    }
}

Spectrum DensityMatrix::spectrum() const {
    const linalg::RealVector eig = linalg::hermitian_eigenvalues(mat_);
    std::vector<double> v(eig.data(), eig.data() + eig.size());
    for (double& x : v) {
        x = std::max(0.0, x);
    }
    return Spectrum(std::move(v), /*renormalize=*/true);
}

DensityMatrix random_density_with_spectrum(const Spectrum& lambda, std::uint64_t seed) {
    const auto n = static_cast<linalg::Index>(lambda.size());
    const linalg::Matrix v = linalg::haar_unitary(n, seed);
    linalg::Matrix diag = linalg::Matrix::Zero(n, n);
    for (linalg::Index i = 0; i < n; ++i) {
        diag(i, i) = lambda[static_cast<std::size_t>(i)];
    }
    linalg::Matrix rho = v * diag * v.adjoint();
    rho = (rho + rho.adjoint()) / 2.0;
    return DensityMatrix(std::move(rho));
}

Spectrum random_simplex_spectrum(std::size_t n, std::uint64_t seed) {
    if (n == 0) {
        raise(ErrorCode::invalid_input, "spectrum must be non-empty");
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> v(n);
    double sum = 0.0;
    for (double& x : v) {
        double u = unit(rng);
        while (u <= 0.0) {
            u = unit(rng);
        }
        x = -std::log(u);
        sum += x;
    }
    for (double& x : v) {
        x /= sum;
    }
    return Spectrum(std::move(v), /*renormalize=*/true);
}

namespace {

std::vector<double> clamp_probs(const Eigen::VectorXd& diag) {
    std::vector<double> p(diag.data(), diag.data() + diag.size());
    for (double& x : p) {
        if (x < -1e-12) {
            raise(ErrorCode::contract_violation, "measurement probability below -1e-12");
        }
        if (x < 0.0) {
            x = 0.0;
        }
    }
    return p;
}

} // namespace

std::vector<double> measurement_probs(const DensityMatrix& rho) {
    return clamp_probs(rho.matrix().diagonal().real());
}

std::vector<double> measurement_probs(const DensityMatrix& rho, const linalg::Matrix& u) {
    linalg::check_finite(u);
    if (u.rows() != rho.dim() || u.cols() != rho.dim()) {
        raise(ErrorCode::invalid_argument, "measurement unitary has mismatched dimension");
    }
    if (!linalg::is_unitary(u, tolerances().unitarity)) {
        raise(ErrorCode::contract_violation, "measurement matrix is not unitary within tolerance");
    }
    const linalg::Matrix rotated = u.adjoint() * rho.matrix() * u;
    return clamp_probs(rotated.diagonal().real());
}

namespace {

void check_normalized_amplitudes(const linalg::Matrix& amplitudes) {
    linalg::check_finite(amplitudes);
    if (std::abs(amplitudes.norm() - 1.0) > tolerances().normalization) {
        raise(ErrorCode::invalid_input, "bipartite amplitudes are not normalized");
    }
}

} // namespace

Spectrum schmidt_vector(const linalg::Matrix& amplitudes) {
    check_normalized_amplitudes(amplitudes);
    const linalg::RealVector sv = linalg::singular_values(amplitudes);
    std::vector<double> v(static_cast<std::size_t>(sv.size()));
    for (linalg::Index i = 0; i < sv.size(); ++i) {
        v[static_cast<std::size_t>(i)] = sv(i) * sv(i);
    }
    return Spectrum(std::move(v), /*renormalize=*/true);
}

DensityMatrix partial_trace_a(const linalg::Matrix& amplitudes) {
    check_normalized_amplitudes(amplitudes);
    linalg::Matrix rho = amplitudes * amplitudes.adjoint();
    rho = (rho + rho.adjoint()) / 2.0;
    return DensityMatrix(std::move(rho));
}

BipartitePureState bipartite_from_amplitudes(const linalg::Matrix& amplitudes) {
    return BipartitePureState{schmidt_vector(amplitudes), amplitudes.rows(),
                              amplitudes.cols()};
}

} // namespace majeur::states
