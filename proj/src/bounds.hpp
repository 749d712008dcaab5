#pragma once

#include "linalg.hpp"
#include "majorize.hpp"
#include "states.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace majeur::bounds {

/// Coefficients s_1 <= s_2 <= ... <= s_N: the maximal operator norms over
/// all submatrices of a unitary with #rows + #cols = k + 1. s_1 is the
/// largest entry modulus, s_N = 1. Stored values are clamped into [0, 1]
/// and made non-decreasing by a running maximum.
class SubCoefficients {
  public:
    explicit SubCoefficients(std::vector<double> s);

    std::size_t dimension() const noexcept { return s_.size(); }
    const std::vector<double>& values() const noexcept { return s_; }

    /// 1-based access extended by the ladder conventions s_0 = 0 and
    /// s_j = 1 for j > N, which make every partial-sum formula total.
    double s(std::size_t j) const {
        if (j == 0) {
            return 0.0;
        }
        return j <= s_.size() ? s_[j - 1] : 1.0;
    }

  private:
    std::vector<double> s_;
};

/// Exhaustive enumeration of all perimeter classes of u. The work grows
/// combinatorially; dimensions above max_dim (0 selects the default cap of
/// 10) fail with resource_limit.
SubCoefficients sub_coefficients(const linalg::Matrix& u, std::size_t max_dim = 0);

/// W = (s_1, s_2 - s_1, ..., s_N - s_{N-1}); non-negative with total s_N.
majorize::WeightVector w_vector(const SubCoefficients& s);

enum class MajorantKind { pure, mixed };

/// Vector majorizing p (+) q. The mixed form has length 2N and total 2;
/// the pure form is {1} (+) W of length N + 1.
struct MajorantVector {
    majorize::WeightVector values;
    MajorantKind kind;
};

/// Partial-sum ladder S_k, k = 1..2N: the largest closed-form bound on any
/// sum of k outcome probabilities drawn from both measurements. Built from
/// the spectrum zero-padded to 2N and the s_j conventions above, so
/// S_1 = lambda_1 and S_2N = 2.
std::vector<double> capital_s(const SubCoefficients& s, const states::Spectrum& lambda);

/// Majorant with elements S_k - S_{k-1}, evaluated through the closed-form
/// coefficient rule (exact in the pure-spectrum limit, where it reduces
/// bitwise to {1} (+) W).
MajorantVector w_lambda(const SubCoefficients& s, const states::Spectrum& lambda);

/// {1} (+) W, the pure-state majorant.
MajorantVector majorant_pure(const SubCoefficients& s);

/// 2n x n matrix Lambda with W_lambda = Lambda W. Row k, column j holds
/// lambda_ceil(k/2) for j <= floor(k/2), lambda_(k-j) for floor(k/2) < j < k
/// and lambda_k for j >= k, with lambda zero-padded. Every column contains
/// each lambda_i exactly twice.
Eigen::MatrixXd lambda_matrix(const states::Spectrum& lambda, std::size_t n);

/// P = 1/2 Lambda diag(W): joint distribution with row marginal
/// W_lambda / 2 and column marginal W.
majorize::JointDistribution joint_distribution(const states::Spectrum& lambda,
                                               const SubCoefficients& s);

/// Lower bound on H(X|B) + H(Y|B): twice the mutual information of the
/// joint distribution above. Coincides with
/// tilde_entropy(W_lambda) - 2 H(lambda); always >= 0.
double conditional_bound(const states::Spectrum& lambda, const SubCoefficients& s);

/// Lower bounds on the entropy sum H(p) + H(q) of the two measurement
/// distributions, for the Shannon, Renyi (order < 1) and Tsallis
/// (any order >= 0) families.
double shannon_bound(const MajorantVector& w);
double renyi_bound(const MajorantVector& w, double alpha);
double tsallis_bound(const MajorantVector& w, double alpha);

/// mu = (1,...,1) + (sigma(A) (+) -sigma(A)), zero-extended to length
/// m + n, for the n x m overlap block A of two orthonormal subsets.
/// Singular values beyond 1 + 1e-9 are rejected.
majorize::WeightVector mu_vector(const linalg::Matrix& overlap, std::size_t m,
                                 std::size_t n);

/// Scalar-product bound lambda-down . mu-down on the sum of m probabilities
/// of the first measurement and n of the second.
double lemma_rhs(const states::Spectrum& lambda, const linalg::Matrix& overlap,
                 std::size_t m, std::size_t n);

/// Closed-form relaxation of the scalar-product bound in terms of the s_j
/// coefficients, for subset sizes n <= m.
double proposition_rhs(const states::Spectrum& lambda, const SubCoefficients& s,
                       std::size_t m, std::size_t n);

struct BaselineValue {
    std::string label;
    std::optional<double> value; // empty when no formula is implemented
    std::string note;
};

/// Comparison baselines, clamped at zero. Selectors: "mu-conditional"
/// (max(0, -2 ln c - 2 H(lambda)) with c the largest overlap modulus),
/// "berta" (max(0, -2 ln c - H(lambda)), externally sourced), "directsum"
/// (max(0, H(W) - 2 H(lambda))). The selectors "kljr" and "kpp" are
/// reserved and resolve to an empty value.
std::vector<BaselineValue> comparison_bounds(const states::Spectrum& lambda,
                                             const SubCoefficients& s,
                                             std::span<const std::string> which);

} // namespace majeur::bounds
