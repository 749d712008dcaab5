#include "bounds.hpp"

#include "combinatorics.hpp"
#include "error.hpp"
#include "tolerances.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace majeur::bounds {

namespace {

constexpr std::size_t kDefaultEnumerationCap = 10;
constexpr double kZeroFloor = 1e-300;

} // namespace

SubCoefficients::SubCoefficients(std::vector<double> s) : s_(std::move(s)) {
    if (s_.empty()) {
        raise(ErrorCode::invalid_input, "coefficient vector must be non-empty");
    }
    double prev = 0.0;
    for (double& v : s_) {
        if (!std::isfinite(v)) {
            raise(ErrorCode::invalid_input, "coefficient vector has non-finite entries");
        }
        if (v < -1e-12 || v > 1.0 + 1e-9) {
            raise(ErrorCode::invalid_input, "coefficients must lie in [0, 1]");
        }
        if (v < prev - 1e-12) {
            raise(ErrorCode::invalid_input, "coefficients must be non-decreasing");
        }
        v = std::clamp(v, prev, 1.0);
        prev = v;
    }
    if (std::abs(s_.back() - 1.0) > 1e-9) {
        raise(ErrorCode::invalid_input, "last coefficient must equal one");
    }
    // The convention s_j = 1 for j >= N holds exactly, so the stored tail is
    // snapped; this keeps 1 - s_{N} an exact zero in the ladder formulas.
    s_.back() = 1.0;
}

SubCoefficients sub_coefficients(const linalg::Matrix& u, std::size_t max_dim) {
    linalg::check_finite(u);
    if (u.rows() != u.cols()) {
        raise(ErrorCode::invalid_input, "coefficients are defined for square unitaries");
    }
    if (!linalg::is_unitary(u, tolerances().unitarity)) {
        raise(ErrorCode::contract_violation, "matrix is not unitary within tolerance");
    }
    const std::size_t n = static_cast<std::size_t>(u.rows());
    const std::size_t cap = max_dim == 0 ? kDefaultEnumerationCap : max_dim;
    if (n > cap) {
        raise(ErrorCode::resource_limit,
              "dimension " + std::to_string(n) + " exceeds the enumeration cap of " +
                  std::to_string(cap));
    }

    std::vector<double> s(n, 0.0);
    for (std::size_t k = 1; k <= n; ++k) {
        // Perimeter class k: submatrices with r rows and c columns,
        // r + c = k + 1.
        double best = 0.0;
        const std::size_t r_lo = k + 1 > n ? k + 1 - n : 1;
        const std::size_t r_hi = std::min(n, k);
        for (std::size_t r = r_lo; r <= r_hi; ++r) {
            const std::size_t c = k + 1 - r;
            for_each_combination(n, r, [&](std::span<const Eigen::Index> rows) {
                for_each_combination(n, c, [&](std::span<const Eigen::Index> cols) {
                    const double norm =
                        linalg::operator_norm(linalg::submatrix(u, rows, cols));
                    best = std::max(best, norm);
                });
            });
        }
        s[k - 1] = best;
    }
    return SubCoefficients(std::move(s));
}

majorize::WeightVector w_vector(const SubCoefficients& s) {
    const std::size_t n = s.dimension();
    std::vector<double> w(n);
    w[0] = s.s(1);
    for (std::size_t j = 2; j <= n; ++j) {
        w[j - 1] = s.s(j) - s.s(j - 1);
    }
    return majorize::WeightVector(std::move(w));
}

std::vector<double> capital_s(const SubCoefficients& s, const states::Spectrum& lambda) {
    const std::size_t n = s.dimension();
    if (lambda.size() > n) {
        raise(ErrorCode::invalid_argument, "spectrum is longer than the unitary dimension");
    }
    std::vector<double> out(2 * n, 0.0);
    for (std::size_t k = 1; k <= 2 * n; ++k) {
        const std::size_t half = k / 2;
        double acc = 0.0;
        for (std::size_t i = 1; i <= half; ++i) {
            acc += lambda.padded(i) * (1.0 + s.s(k - i));
        }
        if (k % 2 == 1) {
            acc += lambda.padded(half + 1);
        }
        for (std::size_t i = half + 1 + (k % 2); i <= k; ++i) {
            acc += lambda.padded(i) * (1.0 - s.s(i - 1));
        }
        out[k - 1] = acc;
    }
    return out;
}

MajorantVector w_lambda(const SubCoefficients& s, const states::Spectrum& lambda) {
    const std::size_t n = s.dimension();
    if (lambda.size() > n) {
        raise(ErrorCode::invalid_argument, "spectrum is longer than the unitary dimension");
    }
    // Element k is the difference S_k - S_{k-1} collapsed term by term:
    //   coeff(lambda_i) = s_{k-i} - s_{k-i-1}   for i < ceil(k/2),
    //                     s_{floor(k/2)}        for i = ceil(k/2),
    //                     0                     for ceil(k/2) < i < k,
    //                     1 - s_{k-1}           for i = k,
    // which keeps the pure-spectrum case exactly equal to {1} (+) W.
    std::vector<double> out(2 * n, 0.0);
    for (std::size_t k = 1; k <= 2 * n; ++k) {
        double acc = 0.0;
        if (k == 1) {
            acc = lambda.padded(1);
        } else {
            const std::size_t ceil_half = (k + 1) / 2;
            const std::size_t limit = std::min<std::size_t>(k, lambda.size());
            for (std::size_t i = 1; i <= limit; ++i) {
                const double lam = lambda.padded(i);
                if (lam == 0.0) {
                    continue;
                }
                double coeff = 0.0;
                if (i < ceil_half) {
                    coeff = s.s(k - i) - s.s(k - i - 1);
                } else if (i == ceil_half) {
                    coeff = s.s(k / 2);
                } else if (i == k) {
                    coeff = 1.0 - s.s(k - 1);
                }
                acc += lam * coeff;
            }
        }
        out[k - 1] = acc;
    }
    return MajorantVector{majorize::WeightVector(std::move(out)), MajorantKind::mixed};
}

MajorantVector majorant_pure(const SubCoefficients& s) {
    const majorize::WeightVector w = w_vector(s);
    std::vector<double> out;
    out.reserve(w.size() + 1);
    out.push_back(1.0);
    out.insert(out.end(), w.values().begin(), w.values().end());
    return MajorantVector{majorize::WeightVector(std::move(out)), MajorantKind::pure};
}

Eigen::MatrixXd lambda_matrix(const states::Spectrum& lambda, std::size_t n) {
    if (n == 0) {
        raise(ErrorCode::invalid_argument, "dimension must be positive");
    }
    if (lambda.size() > n) {
        raise(ErrorCode::invalid_argument, "spectrum is longer than the requested dimension");
    }
    Eigen::MatrixXd out(2 * n, n);
    for (std::size_t k = 1; k <= 2 * n; ++k) {
        for (std::size_t j = 1; j <= n; ++j) {
            double v = 0.0;
            if (j <= k / 2) {
                v = lambda.padded((k + 1) / 2);
            } else if (j < k) {
                v = lambda.padded(k - j);
            } else {
                v = lambda.padded(k);
            }
            out(static_cast<Eigen::Index>(k - 1), static_cast<Eigen::Index>(j - 1)) = v;
        }
    }
    return out;
}

majorize::JointDistribution joint_distribution(const states::Spectrum& lambda,
                                               const SubCoefficients& s) {
    const std::size_t n = s.dimension();
    const Eigen::MatrixXd big_lambda = lambda_matrix(lambda, n);
    const majorize::WeightVector w = w_vector(s);
    Eigen::MatrixXd p = big_lambda;
    for (std::size_t j = 0; j < n; ++j) {
        p.col(static_cast<Eigen::Index>(j)) *= 0.5 * w[j];
    }
    return majorize::JointDistribution(std::move(p));
}

double conditional_bound(const states::Spectrum& lambda, const SubCoefficients& s) {
    return 2.0 * majorize::mutual_information(joint_distribution(lambda, s));
}

double shannon_bound(const MajorantVector& w) {
    return majorize::tilde_entropy(w.values);
}

namespace {

double majorant_power_sum(const MajorantVector& w, double alpha) {
    double acc = 0.0;
    for (const double v : w.values.values()) {
        if (v > kZeroFloor) {
            acc += std::pow(v, alpha);
        }
    }
    return acc;
}

} // namespace

double renyi_bound(const MajorantVector& w, double alpha) {
    if (!(alpha >= 0.0) || alpha >= 1.0) {
        raise(ErrorCode::unsupported_order,
              "the Renyi bound is available for orders in [0, 1)");
    }
    return std::log(majorant_power_sum(w, alpha) - 1.0) / (1.0 - alpha);
}

double tsallis_bound(const MajorantVector& w, double alpha) {
    if (!(alpha >= 0.0)) {
        raise(ErrorCode::unsupported_order, "Tsallis order must be non-negative");
    }
    if (alpha == 1.0) {
        return shannon_bound(w);
    }
    return (majorant_power_sum(w, alpha) - 2.0) / (1.0 - alpha);
}

majorize::WeightVector mu_vector(const linalg::Matrix& overlap, std::size_t m,
                                 std::size_t n) {
    if (m == 0 || n == 0) {
        raise(ErrorCode::invalid_argument, "subset sizes must be positive");
    }
    if (static_cast<std::size_t>(overlap.rows()) != n ||
        static_cast<std::size_t>(overlap.cols()) != m) {
        raise(ErrorCode::invalid_argument, "overlap block must be n x m");
    }
    const linalg::RealVector sigma = linalg::singular_values(overlap);
    std::vector<double> mu(m + n, 1.0);
    for (Eigen::Index i = 0; i < sigma.size(); ++i) {
        double sv = sigma(i);
        if (sv > 1.0 + 1e-9) {
            raise(ErrorCode::contract_violation,
                  "overlap block has a singular value above one");
        }
        sv = std::min(sv, 1.0);
        mu[static_cast<std::size_t>(i)] += sv;
        mu[static_cast<std::size_t>(sigma.size() + i)] -= sv;
    }
    return majorize::WeightVector(std::move(mu));
}

double lemma_rhs(const states::Spectrum& lambda, const linalg::Matrix& overlap,
                 std::size_t m, std::size_t n) {
    std::vector<double> mu = mu_vector(overlap, m, n).values();
    std::sort(mu.begin(), mu.end(), std::greater<double>());
    const std::size_t terms = std::min(lambda.size(), mu.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < terms; ++i) {
        acc += lambda[i] * mu[i];
    }
    return acc;
}

double proposition_rhs(const states::Spectrum& lambda, const SubCoefficients& s,
                       std::size_t m, std::size_t n) {
    const std::size_t dim = s.dimension();
    if (n < 1 || n > m || m > dim) {
        raise(ErrorCode::invalid_argument,
              "subset sizes must satisfy 1 <= n <= m <= N; swap the roles otherwise");
    }
    double acc = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
        acc += lambda.padded(i) * (1.0 + s.s(n + m - i));
    }
    for (std::size_t i = n + 1; i <= m; ++i) {
        acc += lambda.padded(i);
    }
    for (std::size_t i = 1; i <= n; ++i) {
        acc += lambda.padded(m + i) * (1.0 - s.s(m + i - 1));
    }
    return acc;
}

namespace {

double entropy_of_spectrum(const states::Spectrum& lambda) {
    return majorize::tilde_entropy(std::span<const double>(lambda.values()));
}

} // namespace

std::vector<BaselineValue> comparison_bounds(const states::Spectrum& lambda,
                                             const SubCoefficients& s,
                                             std::span<const std::string> which) {
    const double c = s.s(1);
    const double h_lambda = entropy_of_spectrum(lambda);
    std::vector<BaselineValue> out;
    out.reserve(which.size());
    for (const std::string& name : which) {
        if (name == "mu-conditional") {
            const double v = std::max(0.0, -2.0 * std::log(c) - 2.0 * h_lambda);
            out.push_back({name, v, "max(0, -2 ln c - 2 H(lambda)), c = largest overlap modulus"});
        } else if (name == "berta") {
            const double v = std::max(0.0, -2.0 * std::log(c) - h_lambda);
            out.push_back({name, v,
                           "externally sourced: max(0, -2 ln c - H(lambda)), the conditional "
                           "form for a pure bipartite state"});
        } else if (name == "directsum") {
            const double v =
                std::max(0.0, majorize::tilde_entropy(w_vector(s)) - 2.0 * h_lambda);
            out.push_back({name, v, "max(0, H(W) - 2 H(lambda)) from the pure-state "
                                    "direct-sum relation"});
        } else if (name == "kljr" || name == "kpp") {
            out.push_back({name, std::nullopt, "unavailable: no formula implemented"});
        } else {
            raise(ErrorCode::invalid_argument, "unknown baseline selector: " + name);
        }
    }
    return out;
}

} // namespace majeur::bounds
