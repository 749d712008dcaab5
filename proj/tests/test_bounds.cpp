#include "support.hpp"

#include "bounds.hpp"
#include "error.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstring>
#include <random>

using namespace majeur;
using Catch::Matchers::WithinAbs;

namespace {

bounds::SubCoefficients synthetic_coefficients(std::size_t n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> s(n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        s[i] = unit(rng);
    }
    s[n - 1] = 1.0;
    std::sort(s.begin(), s.end());
    return bounds::SubCoefficients(std::move(s));
}

} // namespace

TEST_CASE("submatrix norm coefficients") {
    SECTION("identity") {
        const bounds::SubCoefficients s =
            bounds::sub_coefficients(linalg::Matrix::Identity(3, 3));
        REQUIRE(s.values() == std::vector<double>{1.0, 1.0, 1.0});
    }
    SECTION("two-dimensional Hadamard") {
        const bounds::SubCoefficients s = bounds::sub_coefficients(testsupport::hadamard2());
        REQUIRE_THAT(s.s(1), WithinAbs(1.0 / std::sqrt(2.0), 1e-14));
        REQUIRE(s.s(2) == 1.0);
    }
    SECTION("fixed orthogonal 3x3 matrix") {
        const bounds::SubCoefficients s = bounds::sub_coefficients(testsupport::o3());
        REQUIRE_THAT(s.s(1), WithinAbs(testsupport::frozen::kO3LargestEntry, 1e-12));
        REQUIRE_THAT(s.s(2), WithinAbs(1.0, 1e-12));
        REQUIRE(s.s(3) == 1.0);
    }
    SECTION("matches an independent brute-force enumeration") {
        for (std::uint64_t seed = 1; seed <= 6; ++seed) {
            const std::size_t n = 2 + seed % 3;
            const linalg::Matrix u =
                linalg::haar_unitary(static_cast<linalg::Index>(n), seed);
            const bounds::SubCoefficients fast = bounds::sub_coefficients(u);
            const std::vector<double> brute = testsupport::brute_sub_coefficients(u);
            for (std::size_t k = 0; k < n; ++k) {
                REQUIRE_THAT(fast.values()[k], WithinAbs(brute[k], 1e-10));
            }
        }
    }
    SECTION("first coefficient is the largest entry modulus") {
        const linalg::Matrix u = linalg::haar_unitary(5, 99);
        const bounds::SubCoefficients s = bounds::sub_coefficients(u);
        REQUIRE_THAT(s.s(1), WithinAbs(u.cwiseAbs().maxCoeff(), 1e-12));
    }
    SECTION("dimension cap") {
        REQUIRE_THROWS_MATCHES(
            bounds::sub_coefficients(linalg::Matrix::Identity(11, 11)), Error,
            Catch::Matchers::Predicate<Error>([](const Error& e) {
                return e.code() == ErrorCode::resource_limit;
            }));
        REQUIRE_NOTHROW(bounds::sub_coefficients(linalg::Matrix::Identity(11, 11), 11));
    }
    SECTION("non-unitary input violates the contract") {
        REQUIRE_THROWS_MATCHES(
            bounds::sub_coefficients(linalg::Matrix::Identity(3, 3) * 0.5), Error,
            Catch::Matchers::Predicate<Error>([](const Error& e) {
                return e.code() == ErrorCode::contract_violation;
            }));
    }
}

TEST_CASE("difference vector W") {
    SECTION("identity coefficients") {
        const majorize::WeightVector w = bounds::w_vector(bounds::SubCoefficients({1, 1, 1}));
        REQUIRE(w.values() == std::vector<double>{1.0, 0.0, 0.0});
    }
    SECTION("direct differences") {
        const double c = 1.0 / std::sqrt(2.0);
        const majorize::WeightVector w = bounds::w_vector(bounds::SubCoefficients({c, 1.0}));
        REQUIRE(w[0] == c);
        REQUIRE_THAT(w[1], WithinAbs(1.0 - c, 1e-15));
        REQUIRE_THAT(w.total(), WithinAbs(1.0, 1e-12));
    }
}

TEST_CASE("partial-sum ladder S") {
    SECTION("first elements in closed form") {
        std::mt19937_64 rng(3);
        for (int t = 0; t < 50; ++t) {
            const std::size_t n = 3 + t % 3;
            const bounds::SubCoefficients s = synthetic_coefficients(n, rng);
            const states::Spectrum lambda = states::random_simplex_spectrum(n, rng());
            const std::vector<double> big = bounds::capital_s(s, lambda);
            REQUIRE(big[0] == lambda[0]);
            REQUIRE_THAT(big[1],
                         WithinAbs(lambda[0] * (1 + s.s(1)) + lambda[1] * (1 - s.s(1)), 1e-15));
            REQUIRE_THAT(big[2],
                         WithinAbs(lambda[0] * (1 + s.s(2)) + lambda[1] +
                                       lambda[2] * (1 - s.s(2)),
                                   1e-15));
            // Non-decreasing, ending at the total weight 2.
            for (std::size_t k = 1; k < big.size(); ++k) {
                REQUIRE(big[k] >= big[k - 1] - 1e-12);
            }
            REQUIRE_THAT(big.back(), WithinAbs(2.0, 1e-9));
        }
    }
    SECTION("pure spectrum reduces to 1 + s") {
        const bounds::SubCoefficients s(std::vector<double>{0.5, 0.8, 1.0});
        const std::vector<double> big = bounds::capital_s(s, states::Spectrum::pure(3));
        REQUIRE(big[0] == 1.0);
        for (std::size_t k = 2; k <= 6; ++k) {
            REQUIRE_THAT(big[k - 1], WithinAbs(1.0 + s.s(k - 1), 1e-15));
        }
    }
    SECTION("identity measurement pair") {
        const bounds::SubCoefficients s(std::vector<double>{1.0, 1.0});
        const std::vector<double> big =
            bounds::capital_s(s, states::Spectrum({0.7, 0.3}));
        REQUIRE_THAT(big[0], WithinAbs(0.7, 1e-15));
        REQUIRE_THAT(big[1], WithinAbs(1.4, 1e-15));
        REQUIRE_THAT(big[2], WithinAbs(1.7, 1e-15));
        REQUIRE_THAT(big[3], WithinAbs(2.0, 1e-15));
    }
}

TEST_CASE("mixed-state majorant") {
    SECTION("qubit closed form") {
        std::mt19937_64 rng(9);
        for (int t = 0; t < 50; ++t) {
            const bounds::SubCoefficients s = synthetic_coefficients(2, rng);
            const states::Spectrum lambda = states::random_simplex_spectrum(2, rng());
            const bounds::MajorantVector wl = bounds::w_lambda(s, lambda);
            const double s1 = s.s(1);
            REQUIRE(wl.values.size() == 4);
            REQUIRE(wl.values[0] == lambda[0]);
            REQUIRE(wl.values[1] == lambda[0] * s1 + lambda[1] * (1.0 - s1));
            REQUIRE_THAT(wl.values[2],
                         WithinAbs(lambda[0] * (1.0 - s1) + lambda[1] * s1, 1e-15));
            REQUIRE_THAT(wl.values[3], WithinAbs(lambda[1], 1e-15));
            REQUIRE_THAT(wl.values.total(), WithinAbs(2.0, 1e-9));
        }
    }
    SECTION("pure spectrum reduces bitwise to the pure majorant") {
        for (std::uint64_t seed = 1; seed <= 4; ++seed) {
            const std::size_t n = 2 + seed;
            const linalg::Matrix u =
                linalg::haar_unitary(static_cast<linalg::Index>(n), seed);
            const bounds::SubCoefficients s = bounds::sub_coefficients(u);
            const bounds::MajorantVector mixed =
                bounds::w_lambda(s, states::Spectrum::pure(n));
            const bounds::MajorantVector pure = bounds::majorant_pure(s);
            REQUIRE(mixed.kind == bounds::MajorantKind::mixed);
            REQUIRE(pure.kind == bounds::MajorantKind::pure);
            REQUIRE(pure.values.size() == n + 1);
            REQUIRE(std::memcmp(mixed.values.values().data(), pure.values.values().data(),
                                (n + 1) * sizeof(double)) == 0);
            for (std::size_t k = n + 1; k < 2 * n; ++k) {
                REQUIRE(mixed.values[k] == 0.0);
            }
        }
    }
    SECTION("identity measurement pair doubles the spectrum") {
        const bounds::MajorantVector wl = bounds::w_lambda(
            bounds::SubCoefficients({1.0, 1.0}), states::Spectrum({0.7, 0.3}));
        REQUIRE(wl.values.values() == std::vector<double>{0.7, 0.7, 0.3, 0.3});
    }
    SECTION("agrees with the matrix route and the ladder differences") {
        std::mt19937_64 rng(13);
        for (int t = 0; t < 1000; ++t) {
            const std::size_t n = 2 + t % 5;
            const bounds::SubCoefficients s = synthetic_coefficients(n, rng);
            const states::Spectrum lambda = states::random_simplex_spectrum(n, rng());
            const bounds::MajorantVector wl = bounds::w_lambda(s, lambda);
            const std::vector<double> big = bounds::capital_s(s, lambda);
            const Eigen::MatrixXd lm = bounds::lambda_matrix(lambda, n);
            const majorize::WeightVector w = bounds::w_vector(s);
            Eigen::VectorXd wv(static_cast<Eigen::Index>(n));
            for (std::size_t j = 0; j < n; ++j) {
                wv(static_cast<Eigen::Index>(j)) = w[j];
            }
            const Eigen::VectorXd product = lm * wv;
            for (std::size_t k = 0; k < 2 * n; ++k) {
                const double via_s = big[k] - (k == 0 ? 0.0 : big[k - 1]);
                REQUIRE_THAT(wl.values[k],
                             WithinAbs(product(static_cast<Eigen::Index>(k)), 1e-10));
                REQUIRE_THAT(wl.values[k], WithinAbs(via_s, 1e-10));
            }
        }
    }
}

TEST_CASE("lambda matrix structure") {
    SECTION("qubit display") {
        const Eigen::MatrixXd m = bounds::lambda_matrix(states::Spectrum({0.7, 0.3}), 2);
        Eigen::MatrixXd expected(4, 2);
        expected << 0.7, 0.7, 0.7, 0.3, 0.3, 0.7, 0.3, 0.3;
        REQUIRE((m - expected).cwiseAbs().maxCoeff() == 0.0);
    }
    SECTION("first two rows for larger dimensions") {
        const states::Spectrum lambda({0.4, 0.3, 0.2, 0.1});
        const Eigen::MatrixXd m = bounds::lambda_matrix(lambda, 4);
        for (int j = 0; j < 4; ++j) {
            REQUIRE(m(0, j) == 0.4);
            REQUIRE(m(1, j) == (j == 0 ? 0.4 : 0.3));
        }
    }
    SECTION("columns hold each eigenvalue twice") {
        std::mt19937_64 rng(17);
        for (int t = 0; t < 100; ++t) {
            const std::size_t n = 2 + t % 5;
            const states::Spectrum lambda = states::random_simplex_spectrum(n, rng());
            const Eigen::MatrixXd m = bounds::lambda_matrix(lambda, n);
            for (std::size_t j = 0; j < n; ++j) {
                REQUIRE_THAT(m.col(static_cast<Eigen::Index>(j)).sum(),
                             WithinAbs(2.0, 1e-10));
                std::vector<double> column(m.col(static_cast<Eigen::Index>(j)).data(),
                                           m.col(static_cast<Eigen::Index>(j)).data() + 2 * n);
                std::vector<double> doubled;
                for (std::size_t i = 0; i < n; ++i) {
                    doubled.push_back(lambda[i]);
                    doubled.push_back(lambda[i]);
                }
                std::sort(column.begin(), column.end());
                std::sort(doubled.begin(), doubled.end());
                REQUIRE(column == doubled);
            }
        }
    }
}

TEST_CASE("joint distribution") {
    SECTION("marginals and entry multiset") {
        std::mt19937_64 rng(19);
        for (int t = 0; t < 200; ++t) {
            const std::size_t n = 2 + t % 4;
            const bounds::SubCoefficients s = synthetic_coefficients(n, rng);
            const states::Spectrum lambda = states::random_simplex_spectrum(n, rng());
            const majorize::JointDistribution p = bounds::joint_distribution(lambda, s);
            const bounds::MajorantVector wl = bounds::w_lambda(s, lambda);
            const majorize::WeightVector w = bounds::w_vector(s);
            for (std::size_t k = 0; k < 2 * n; ++k) {
                REQUIRE_THAT(p.row_marginal()[k], WithinAbs(0.5 * wl.values[k], 1e-10));
            }
            for (std::size_t j = 0; j < n; ++j) {
                REQUIRE_THAT(p.col_marginal()[j], WithinAbs(w[j], 1e-10));
            }
        }
    }
    SECTION("pure qubit entry multiset") {
        const double c = 1.0 / std::sqrt(2.0);
        const majorize::JointDistribution p = bounds::joint_distribution(
            states::Spectrum({1.0, 0.0}), bounds::SubCoefficients({c, 1.0}));
        std::vector<double> entries(p.matrix().data(), p.matrix().data() + p.matrix().size());
        std::sort(entries.begin(), entries.end(), std::greater<double>());
        REQUIRE_THAT(entries[0], WithinAbs(0.5 * c, 1e-15));
        REQUIRE_THAT(entries[1], WithinAbs(0.5 * c, 1e-15));
        REQUIRE_THAT(entries[2], WithinAbs(0.5 * (1.0 - c), 1e-15));
        REQUIRE_THAT(entries[3], WithinAbs(0.5 * (1.0 - c), 1e-15));
        for (std::size_t i = 4; i < entries.size(); ++i) {
            REQUIRE(entries[i] == 0.0);
        }
    }
    SECTION("entropy identity") {
        std::mt19937_64 rng(23);
        for (int t = 0; t < 100; ++t) {
            const std::size_t n = 2 + t % 4;
            const bounds::SubCoefficients s = synthetic_coefficients(n, rng);
            const states::Spectrum lambda = states::random_simplex_spectrum(n, rng());
            const majorize::JointDistribution p = bounds::joint_distribution(lambda, s);
            const double h_p = majorize::tilde_entropy(std::span<const double>(
                p.matrix().data(), static_cast<std::size_t>(p.matrix().size())));
            const double expected =
                majorize::tilde_entropy(std::span<const double>(lambda.values())) +
                majorize::tilde_entropy(bounds::w_vector(s)) + std::log(2.0);
            REQUIRE_THAT(h_p, WithinAbs(expected, 1e-9));
        }
    }
    SECTION("identity measurement pair collapses to one column") {
        const majorize::JointDistribution p = bounds::joint_distribution(
            states::Spectrum({0.6, 0.4}), bounds::SubCoefficients({1.0, 1.0}));
        REQUIRE_THAT(p.col_marginal()[0], WithinAbs(1.0, 1e-12));
        REQUIRE_THAT(p.col_marginal()[1], WithinAbs(0.0, 1e-12));
        REQUIRE_THAT(majorize::mutual_information(p), WithinAbs(0.0, 1e-12));
    }
}

TEST_CASE("conditional bound") {
    SECTION("identical measurements carry no bound") {
        for (const auto& lambda :
             {states::Spectrum({0.7, 0.3}), states::Spectrum::uniform(2)}) {
            REQUIRE_THAT(
                bounds::conditional_bound(lambda, bounds::SubCoefficients({1.0, 1.0})),
                WithinAbs(0.0, 1e-12));
        }
    }
    SECTION("pure spectrum reduces to the Shannon bound of W") {
        const bounds::SubCoefficients s =
            bounds::sub_coefficients(testsupport::hadamard2());
        REQUIRE_THAT(bounds::conditional_bound(states::Spectrum::pure(2), s),
                     WithinAbs(testsupport::frozen::kShannonBoundHadamard, 1e-12));
    }
    SECTION("coincides with the tilde-entropy route") {
        std::mt19937_64 rng(29);
        for (int t = 0; t < 500; ++t) {
            const std::size_t n = 2 + t % 5;
            const bounds::SubCoefficients s = synthetic_coefficients(n, rng);
            const states::Spectrum lambda = states::random_simplex_spectrum(n, rng());
            const double via_info = bounds::conditional_bound(lambda, s);
            const double via_tilde =
                majorize::tilde_entropy(bounds::w_lambda(s, lambda).values) -
                2.0 * majorize::tilde_entropy(std::span<const double>(lambda.values()));
            REQUIRE_THAT(via_info, WithinAbs(via_tilde, 1e-9));
            REQUIRE(via_info >= 0.0);
        }
    }
}

TEST_CASE("entropy-sum bounds") {
    const bounds::SubCoefficients hadamard =
        bounds::sub_coefficients(testsupport::hadamard2());
    const bounds::MajorantVector pure = bounds::majorant_pure(hadamard);
    SECTION("shannon value for the pure Hadamard case") {
        REQUIRE_THAT(bounds::shannon_bound(pure),
                     WithinAbs(testsupport::frozen::kShannonBoundHadamard, 1e-12));
        // The leading 1 contributes exactly zero.
        REQUIRE(bounds::shannon_bound(pure) ==
                majorize::shannon(bounds::w_vector(hadamard)));
    }
    SECTION("doubled spectrum for identical measurements") {
        const bounds::MajorantVector wl = bounds::w_lambda(
            bounds::SubCoefficients({1.0, 1.0}), states::Spectrum({0.7, 0.3}));
        REQUIRE_THAT(bounds::shannon_bound(wl),
                     WithinAbs(testsupport::frozen::kTwoShannon73, 1e-12));
    }
    SECTION("renyi bound") {
        REQUIRE_THAT(bounds::renyi_bound(pure, 0.5),
                     WithinAbs(testsupport::frozen::kRenyiHalfBoundHadamard, 1e-12));
        REQUIRE_THAT(bounds::renyi_bound(pure, 1.0 - 1e-5),
                     WithinAbs(bounds::shannon_bound(pure), 1e-4));
        const bounds::MajorantVector identity_pure = bounds::w_lambda(
            bounds::SubCoefficients({1.0, 1.0}), states::Spectrum::pure(2));
        REQUIRE_THAT(bounds::renyi_bound(identity_pure, 0.5), WithinAbs(0.0, 1e-12));
        REQUIRE_THROWS_MATCHES(bounds::renyi_bound(pure, 1.0), Error,
                               Catch::Matchers::Predicate<Error>([](const Error& e) {
                                   return e.code() == ErrorCode::unsupported_order;
                               }));
        REQUIRE_THROWS_AS(bounds::renyi_bound(pure, -0.1), Error);
    }
    SECTION("tsallis bound") {
        REQUIRE_THAT(bounds::tsallis_bound(pure, 2.0),
                     WithinAbs(testsupport::frozen::kTsallisTwoBoundHadamard, 1e-12));
        const bounds::MajorantVector identity_pure = bounds::w_lambda(
            bounds::SubCoefficients({1.0, 1.0}), states::Spectrum::pure(2));
        for (const double alpha : {0.5, 2.0, 3.0}) {
            REQUIRE_THAT(bounds::tsallis_bound(identity_pure, alpha), WithinAbs(0.0, 1e-12));
        }
        // Order zero counts the support minus two.
        REQUIRE_THAT(bounds::tsallis_bound(pure, 0.0), WithinAbs(1.0, 1e-12));
        REQUIRE(bounds::tsallis_bound(pure, 1.0) == bounds::shannon_bound(pure));
        REQUIRE_THROWS_AS(bounds::tsallis_bound(pure, -2.0), Error);
    }
}

TEST_CASE("overlap spectrum vector mu") {
    SECTION("single overlap against four") {
        // One row, four columns: a single nonzero singular value.
        linalg::Matrix a(1, 4);
        a << 0.6, 0.0, 0.0, 0.0;
        const majorize::WeightVector mu = bounds::mu_vector(a, 4, 1);
        std::vector<double> sorted = mu.values();
        std::sort(sorted.begin(), sorted.end(), std::greater<double>());
        REQUIRE_THAT(sorted[0], WithinAbs(1.6, 1e-15));
        REQUIRE(sorted[1] == 1.0);
        REQUIRE(sorted[2] == 1.0);
        REQUIRE(sorted[3] == 1.0);
        REQUIRE_THAT(sorted[4], WithinAbs(0.4, 1e-15));
        REQUIRE_THAT(mu.total(), WithinAbs(5.0, 1e-12));
    }
    SECTION("aligned and orthogonal single vectors") {
        linalg::Matrix one(1, 1);
        one << 1.0;
        const majorize::WeightVector aligned = bounds::mu_vector(one, 1, 1);
        REQUIRE(aligned.values() == std::vector<double>{2.0, 0.0});
        linalg::Matrix zero(1, 1);
        zero << 0.0;
        const majorize::WeightVector orthogonal = bounds::mu_vector(zero, 1, 1);
        REQUIRE(orthogonal.values() == std::vector<double>{1.0, 1.0});
    }
    SECTION("overlaps above one are rejected") {
        linalg::Matrix bad(1, 1);
        bad << 2.0;
        REQUIRE_THROWS_AS(bounds::mu_vector(bad, 1, 1), Error);
    }
}

TEST_CASE("scalar-product bound") {
    SECTION("same basis vector") {
        linalg::Matrix one(1, 1);
        one << 1.0;
        REQUIRE_THAT(bounds::lemma_rhs(states::Spectrum({0.7, 0.3}), one, 1, 1),
                     WithinAbs(1.4, 1e-14));
    }
    SECTION("pure spectrum recovers 1 + sigma") {
        linalg::Matrix a(1, 1);
        a << 0.42;
        REQUIRE_THAT(bounds::lemma_rhs(states::Spectrum::pure(4), a, 1, 1),
                     WithinAbs(1.42, 1e-14));
    }
    SECTION("full bases sum to two") {
        const linalg::Matrix u = linalg::haar_unitary(3, 55);
        const linalg::Matrix overlap = u.adjoint(); // <a_i|j> for a_i = columns of u
        REQUIRE_THAT(bounds::lemma_rhs(states::random_simplex_spectrum(3, 77), overlap, 3, 3),
                     WithinAbs(2.0, 1e-10));
    }
}

TEST_CASE("closed-form relaxation dominates the scalar-product bound") {
    SECTION("qubit special cases") {
        std::mt19937_64 rng(37);
        for (int t = 0; t < 50; ++t) {
            const bounds::SubCoefficients s = synthetic_coefficients(2, rng);
            const states::Spectrum lambda = states::random_simplex_spectrum(2, rng());
            REQUIRE_THAT(bounds::proposition_rhs(lambda, s, 1, 1),
                         WithinAbs(lambda[0] * (1 + s.s(1)) + lambda[1] * (1 - s.s(1)), 1e-15));
            REQUIRE_THAT(bounds::proposition_rhs(lambda, s, 2, 1),
                         WithinAbs(1.0 + lambda[0], 1e-12));
        }
    }
    SECTION("pure spectrum closed form") {
        std::mt19937_64 rng(41);
        const bounds::SubCoefficients s = synthetic_coefficients(5, rng);
        const states::Spectrum pure = states::Spectrum::pure(5);
        for (std::size_t m = 1; m <= 5; ++m) {
            for (std::size_t n = 1; n <= m; ++n) {
                REQUIRE_THAT(bounds::proposition_rhs(pure, s, m, n),
                             WithinAbs(1.0 + s.s(n + m - 1), 1e-15));
            }
        }
    }
    SECTION("argument order is enforced") {
        REQUIRE_THROWS_MATCHES(
            bounds::proposition_rhs(states::Spectrum({0.5, 0.5}),
                                    bounds::SubCoefficients({0.8, 1.0}), 1, 2),
            Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                return e.code() == ErrorCode::invalid_argument;
            }));
    }
    SECTION("dominates the exact overlap bound on random bases") {
        std::mt19937_64 rng(43);
        for (int t = 0; t < 300; ++t) {
            const std::size_t n = 2 + t % 4;
            const auto dim = static_cast<linalg::Index>(n);
            const linalg::Matrix u = linalg::haar_unitary(dim, rng());
            const bounds::SubCoefficients s = bounds::sub_coefficients(u);
            const states::Spectrum lambda = states::random_simplex_spectrum(n, rng());
            std::uniform_int_distribution<std::size_t> size_dist(1, n);
            const std::size_t m = size_dist(rng);
            const std::size_t n2 = size_dist(rng);
            std::vector<linalg::Index> all(n);
            std::iota(all.begin(), all.end(), linalg::Index{0});
            std::shuffle(all.begin(), all.end(), rng);
            std::vector<linalg::Index> s1(all.begin(), all.begin() + static_cast<long>(m));
            std::shuffle(all.begin(), all.end(), rng);
            std::vector<linalg::Index> s2(all.begin(), all.begin() + static_cast<long>(n2));
            std::sort(s1.begin(), s1.end());
            std::sort(s2.begin(), s2.end());
            linalg::Matrix b1(dim, static_cast<linalg::Index>(m));
            for (std::size_t j = 0; j < m; ++j) {
                b1.col(static_cast<linalg::Index>(j)) =
                    linalg::Matrix::Identity(dim, dim).col(s1[j]);
            }
            linalg::Matrix b2(dim, static_cast<linalg::Index>(n2));
            for (std::size_t j = 0; j < n2; ++j) {
                b2.col(static_cast<linalg::Index>(j)) = u.col(s2[j]);
            }
            const linalg::Matrix overlap = b2.adjoint() * b1;
            const double lemma = bounds::lemma_rhs(lambda, overlap, m, n2);
            const double prop =
                bounds::proposition_rhs(lambda, s, std::max(m, n2), std::min(m, n2));
            REQUIRE(prop >= lemma - 1e-9);
        }
    }
}

TEST_CASE("comparison baselines") {
    const bounds::SubCoefficients hadamard =
        bounds::sub_coefficients(testsupport::hadamard2());
    const std::string names[] = {"mu-conditional", "berta", "directsum", "kljr", "kpp"};
    SECTION("pure Hadamard values") {
        const auto values =
            bounds::comparison_bounds(states::Spectrum::pure(2), hadamard, names);
        REQUIRE(values.size() == 5);
        REQUIRE_THAT(*values[0].value, WithinAbs(std::log(2.0), 1e-12));
        REQUIRE_THAT(*values[1].value, WithinAbs(std::log(2.0), 1e-12));
        REQUIRE_THAT(*values[2].value,
                     WithinAbs(testsupport::frozen::kShannonBoundHadamard, 1e-12));
        REQUIRE_FALSE(values[3].value.has_value());
        REQUIRE_FALSE(values[4].value.has_value());
        REQUIRE(values[1].note.find("externally sourced") != std::string::npos);
    }
    SECTION("uniform spectrum clamps everything to zero") {
        const auto values = bounds::comparison_bounds(
            states::Spectrum::uniform(2), hadamard,
            std::vector<std::string>{"mu-conditional", "berta", "directsum"});
        for (const auto& v : values) {
            // B_B sits exactly at the clamp edge here, so round-off may
            // leave a positive residue of a few ulp.
            REQUIRE_THAT(*v.value, WithinAbs(0.0, 1e-12));
        }
    }
    SECTION("identity measurements clamp to zero on pure states") {
        const auto values = bounds::comparison_bounds(
            states::Spectrum::pure(2), bounds::SubCoefficients({1.0, 1.0}),
            std::vector<std::string>{"mu-conditional", "berta", "directsum"});
        for (const auto& v : values) {
            REQUIRE(*v.value == 0.0);
        }
    }
    SECTION("baselines never go negative") {
        std::mt19937_64 rng(61);
        for (int t = 0; t < 200; ++t) {
            const std::size_t n = 2 + t % 4;
            const bounds::SubCoefficients s = bounds::sub_coefficients(
                linalg::haar_unitary(static_cast<linalg::Index>(n), rng()));
            const states::Spectrum lambda = states::random_simplex_spectrum(n, rng());
            for (const auto& v : bounds::comparison_bounds(
                     lambda, s,
                     std::vector<std::string>{"mu-conditional", "berta", "directsum"})) {
                REQUIRE(*v.value >= 0.0);
            }
        }
    }
    SECTION("unknown selector") {
        REQUIRE_THROWS_AS(
            bounds::comparison_bounds(states::Spectrum::pure(2), hadamard,
                                      std::vector<std::string>{"nonsense"}),
            Error);
    }
}

TEST_CASE("qubit extras") {
    SECTION("largest entry of a 2x2 unitary is at least 1/sqrt2") {
        for (std::uint64_t seed = 0; seed < 1000; ++seed) {
            const bounds::SubCoefficients s =
                bounds::sub_coefficients(linalg::haar_unitary(2, seed));
            REQUIRE(s.s(1) >= 1.0 / std::sqrt(2.0) - 1e-9);
        }
    }
    SECTION("the mixed majorant is majorized by W (+) lambda") {
        std::mt19937_64 rng(47);
        for (int t = 0; t < 1000; ++t) {
            const bounds::SubCoefficients s =
                bounds::sub_coefficients(linalg::haar_unitary(2, rng()));
            const states::Spectrum lambda = states::random_simplex_spectrum(2, rng());
            const bounds::MajorantVector wl = bounds::w_lambda(s, lambda);
            std::vector<double> concat = bounds::w_vector(s).values();
            concat.insert(concat.end(), lambda.values().begin(), lambda.values().end());
            REQUIRE(majorize::is_majorized_by(wl.values, majorize::WeightVector(concat),
                                              1e-9));
        }
    }
}
