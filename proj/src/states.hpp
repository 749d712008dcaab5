#pragma once

#include "linalg.hpp"

#include <cstdint>
#include <vector>

namespace majeur::states {

/// Eigenvalue / Schmidt-coefficient vector: non-negative, summing to one,
/// stored non-increasing. Entries in [-1e-12, 0) are clamped to zero. With
/// renormalize set, a sum within 1e-6 of one is rescaled instead of
/// rejected.
class Spectrum {
  public:
    explicit Spectrum(std::vector<double> values, bool renormalize = false);

    static Spectrum pure(std::size_t n);
    static Spectrum uniform(std::size_t n);

    const std::vector<double>& values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }

    /// 1-based access with zero padding beyond the stored length.
    double padded(std::size_t i) const {
        return (i >= 1 && i <= values_.size()) ? values_[i - 1] : 0.0;
    }

  private:
    std::vector<double> values_;
};

/// Hermitian, positive semi-definite, unit-trace matrix.
class DensityMatrix {
  public:
    explicit DensityMatrix(linalg::Matrix m);

    const linalg::Matrix& matrix() const noexcept { return mat_; }
    linalg::Index dim() const noexcept { return mat_.rows(); }
    Spectrum spectrum() const;

  private:
    linalg::Matrix mat_;
};

struct BipartitePureState {
    Spectrum schmidt;
    linalg::Index dim_a = 0;
    linalg::Index dim_b = 0;
};

/// rho = V diag(lambda) V* with V Haar; the spectrum is preserved exactly up
/// to round-off. Deterministic per seed.
DensityMatrix random_density_with_spectrum(const Spectrum& lambda, std::uint64_t seed);

/// Spectrum drawn uniformly from the probability simplex (normalized
/// exponentials), then sorted. Deterministic per seed.
Spectrum random_simplex_spectrum(std::size_t n, std::uint64_t seed);

/// Outcome probabilities of the projective measurement in the computational
/// basis (first overload) or in the basis given by the columns of u.
std::vector<double> measurement_probs(const DensityMatrix& rho);
std::vector<double> measurement_probs(const DensityMatrix& rho, const linalg::Matrix& u);

/// Squared singular values of the coefficient matrix of a normalized
/// bipartite pure state.
Spectrum schmidt_vector(const linalg::Matrix& amplitudes);

/// Reduction onto the first subsystem: G G* for coefficient matrix G.
DensityMatrix partial_trace_a(const linalg::Matrix& amplitudes);

BipartitePureState bipartite_from_amplitudes(const linalg::Matrix& amplitudes);

} // namespace majeur::states
