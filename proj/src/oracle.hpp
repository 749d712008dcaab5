#pragma once

#include "bounds.hpp"
#include "linalg.hpp"
#include "states.hpp"

#include <cstdint>
#include <span>
#include <string>

namespace majeur::oracle {

/// Outcome of a randomized or exhaustive verification run. Every check
/// produces a normalized excess (deviation minus the tolerance of that
/// check); a positive excess is a violation. worst_slack keeps the largest
/// excess seen, so a negative value reports the surviving margin.
struct VerificationReport {
    std::string claim_id;
    std::uint64_t trials = 0;
    std::uint64_t violations = 0;
    double worst_slack = -1e300;
    std::uint64_t seed = 0;

    void record(double excess) {
        worst_slack = std::max(worst_slack, excess);
        ++trials;
        if (excess > 0.0) {
            ++violations;
        }
    }

    void merge(const VerificationReport& other) {
        trials += other.trials;
        violations += other.violations;
        worst_slack = std::max(worst_slack, other.worst_slack);
    }
};

/// Deterministic per-trial seed derivation (splitmix64 chain), so parallel
/// callers can reproduce any individual trial.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

/// Samples (U Haar, lambda simplex, rho with spectrum lambda) and checks
/// that the direct sum of the two outcome distributions is majorized by the
/// mixed-state majorant. Dimensions 2..6.
VerificationReport verify_majorization(std::size_t n, std::uint64_t trials,
                                       std::uint64_t seed);

/// Same check with a fixed unitary; lambda and rho are sampled per trial.
VerificationReport verify_majorization_fixed(const linalg::Matrix& u,
                                             std::uint64_t trials, std::uint64_t seed);

/// Samples random basis pairs, subset sizes and states; checks the
/// scalar-product bound lambda . mu and the eigenvalue identity
/// eig(M) = {1 + sigma(A)} (+) {1 - sigma(A)} (zero-padded).
VerificationReport verify_lemma(std::size_t n, std::uint64_t trials, std::uint64_t seed);

/// Exact maximum of sum_{j in subset1} p_j + sum_{i in subset2} q_i over
/// all states with the given spectrum: the trace inequality gives
/// lambda-down . eig-down of the summed projectors, and the maximum is
/// attained.
double exact_partial_sum_max(const states::Spectrum& lambda,
                             std::span<const linalg::Index> subset_one,
                             std::span<const linalg::Index> subset_two,
                             const linalg::Matrix& u);

/// Exhaustive ladder check for one (U, lambda): for every k, every split
/// m + n = k and every pair of index subsets,
/// exact maximum <= proposition bound <= S_k (tolerance 1e-10), and the
/// even/odd split rule reproduces both max and S_k (tolerance 1e-12).
VerificationReport verify_tightness_ladder(const linalg::Matrix& u,
                                           const states::Spectrum& lambda);

/// Identity checks for one (lambda, s): entropy of the joint distribution,
/// the mutual-information form of the majorant entropy, Lambda W against
/// both difference routes, marginals, and the tensor multiset structure.
VerificationReport verify_identities(const states::Spectrum& lambda,
                                     const bounds::SubCoefficients& s);

/// Theorem-2 style check: entropy sums dominate the Shannon, Renyi
/// (alpha in {0.1, 0.5, 0.9}) and Tsallis (alpha in {0.5, 2, 3}) bounds on
/// sampled (U, lambda, rho).
VerificationReport verify_entropy_bounds(std::size_t n, std::uint64_t trials,
                                         std::uint64_t seed);

/// Trial-driving wrappers used by the CLI verify command.
VerificationReport run_identities_suite(std::size_t n, std::uint64_t trials,
                                        std::uint64_t seed);
VerificationReport run_ladder_suite(std::size_t n, std::uint64_t trials,
                                    std::uint64_t seed);

} // namespace majeur::oracle
