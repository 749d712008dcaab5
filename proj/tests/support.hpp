#pragma once

#include "bounds.hpp"
#include "linalg.hpp"
#include "majorize.hpp"
#include "states.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

namespace testsupport {

// Expected values computed independently with 30-digit arithmetic and
// frozen here.
namespace frozen {
// H((1/sqrt2, 1 - 1/sqrt2)); also tilde of {1, 1/sqrt2, 1 - 1/sqrt2}.
inline constexpr double kShannonBoundHadamard = 0.60472193715928517;
// Renyi bound of order 1/2 on {1, 1/sqrt2, 1 - 1/sqrt2}.
inline constexpr double kRenyiHalfBoundHadamard = 0.64719733246145514;
// Tsallis bound of order 2 on the same majorant: sqrt2 - 1.
inline constexpr double kTsallisTwoBoundHadamard = 0.41421356237309505;
// Largest entry modulus of the fixed 3x3 orthogonal matrix: 2/sqrt6.
inline constexpr double kO3LargestEntry = 0.81649658092772603;
// H((2/sqrt6, 1 - 2/sqrt6, 0)).
inline constexpr double kShannonBoundO3 = 0.47666451750762932;
// H((sqrt3/2, 1 - sqrt3/2)) for the rotation by pi/3.
inline constexpr double kShannonBoundRotPi3 = 0.39387300758516951;
// 2 H((0.7, 0.3)).
inline constexpr double kTwoShannon73 = 1.2217286041097869;
// (3/2) ln 2.
inline constexpr double kDyadicEntropy = 1.0397207708399180;
// 1 +- 1/sqrt2: eigenvalues of the summed Hadamard-basis projectors.
inline constexpr double kOnePlusInvSqrt2 = 1.7071067811865475;
inline constexpr double kOneMinusInvSqrt2 = 0.29289321881345248;
} // namespace frozen

// Independent re-enumeration of the submatrix norm coefficients: recursive
// subset generation plus a full Jacobi SVD per submatrix, sharing no code
// with the production path.
inline std::vector<double> brute_sub_coefficients(const majeur::linalg::Matrix& u) {
    const auto n = static_cast<std::size_t>(u.rows());
    std::vector<double> s(n, 0.0);

    std::vector<Eigen::Index> rows;
    std::vector<Eigen::Index> cols;
    std::function<void(std::size_t, std::size_t, std::size_t)> pick_cols =
        [&](std::size_t start, std::size_t remaining, std::size_t k) {
            if (remaining == 0) {
                const majeur::linalg::Matrix block =
                    majeur::linalg::submatrix(u, rows, cols);
                const double top = majeur::linalg::singular_values(block)(0);
                s[k - 1] = std::max(s[k - 1], top);
                return;
            }
            for (std::size_t c = start; c + remaining <= n; ++c) {
                cols.push_back(static_cast<Eigen::Index>(c));
                pick_cols(c + 1, remaining - 1, k);
                cols.pop_back();
            }
        };
    std::function<void(std::size_t, std::size_t, std::size_t, std::size_t)> pick_rows =
        [&](std::size_t start, std::size_t remaining, std::size_t c_count, std::size_t k) {
            if (remaining == 0) {
                pick_cols(0, c_count, k);
                return;
            }
            for (std::size_t r = start; r + remaining <= n; ++r) {
                rows.push_back(static_cast<Eigen::Index>(r));
                pick_rows(r + 1, remaining - 1, c_count, k);
                rows.pop_back();
            }
        };

    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t r = 1; r <= std::min(n, k); ++r) {
            const std::size_t c = k + 1 - r;
            if (c < 1 || c > n) {
                continue;
            }
            pick_rows(0, r, c, k);
        }
    }
    for (std::size_t k = 1; k < n; ++k) {
        s[k] = std::max(s[k], s[k - 1]);
    }
    return s;
}

// x = T y for a random doubly stochastic T (convex mixture of permutations),
// so x is majorized by y.
inline std::vector<double> doubly_stochastic_mix(const std::vector<double>& y,
                                                 std::mt19937_64& rng,
                                                 std::size_t terms = 4) {
    const std::size_t n = y.size();
    std::vector<double> weights(terms);
    double total = 0.0;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (double& w : weights) {
        w = unit(rng) + 1e-12;
        total += w;
    }
    std::vector<double> x(n, 0.0);
    std::vector<std::size_t> perm(n);
    for (std::size_t t = 0; t < terms; ++t) {
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        std::shuffle(perm.begin(), perm.end(), rng);
        for (std::size_t i = 0; i < n; ++i) {
            x[i] += weights[t] / total * y[perm[i]];
        }
    }
    return x;
}

inline majeur::linalg::Matrix hadamard2() {
    majeur::linalg::Matrix m(2, 2);
    const double h = 1.0 / std::sqrt(2.0);
    m << h, h, h, -h;
    return m;
}

inline majeur::linalg::Matrix o3() {
    majeur::linalg::Matrix m(3, 3);
    const double s2 = std::sqrt(2.0);
    const double s3 = std::sqrt(3.0);
    m << s2, s2, s2, s3, 0.0, -s3, 1.0, -2.0, 1.0;
    return m / std::sqrt(6.0);
}

inline majeur::linalg::Matrix rotation(double theta) {
    majeur::linalg::Matrix m(2, 2);
    m << std::cos(theta), std::sin(theta), -std::sin(theta), std::cos(theta);
    return m;
}

} // namespace testsupport
