#include "majorize.hpp"

#include "error.hpp"
#include "tolerances.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

namespace majeur::majorize {

namespace {

// Entries below this are treated as exact zeros in entropy sums, keeping
// 0 ln 0 = 0 free of underflow artifacts.
constexpr double kZeroFloor = 1e-300;

std::vector<double> validated_weights(std::vector<double> values) {
    if (values.empty()) {
        raise(ErrorCode::invalid_input, "weight vector must be non-empty");
    }
    for (double& v : values) {
        if (!std::isfinite(v)) {
            raise(ErrorCode::invalid_input, "weight vector has non-finite entries");
        }
        if (v < -1e-12) {
            raise(ErrorCode::invalid_input, "weight vector entry below -1e-12");
        }
        if (v < 0.0) {
            v = 0.0;
        }
    }
    return values;
}

} // namespace

WeightVector::WeightVector(std::vector<double> values)
    : values_(validated_weights(std::move(values))) {
    total_ = std::accumulate(values_.begin(), values_.end(), 0.0);
}

double majorization_excess(const WeightVector& x, const WeightVector& y) {
    std::vector<double> xs = x.values();
    std::vector<double> ys = y.values();
    std::sort(xs.begin(), xs.end(), std::greater<double>());
    std::sort(ys.begin(), ys.end(), std::greater<double>());
    const std::size_t len = std::max(xs.size(), ys.size());
    double px = 0.0;
    double py = 0.0;
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < len; ++i) {
        px += i < xs.size() ? xs[i] : 0.0;
        py += i < ys.size() ? ys[i] : 0.0;
        worst = std::max(worst, px - py);
    }
    return worst;
}

bool is_majorized_by(const WeightVector& x, const WeightVector& y, double slack) {
    if (std::abs(x.total() - y.total()) > slack) {
        raise(ErrorCode::invalid_comparison,
              "majorization requires equal totals within the slack");
    }
    return majorization_excess(x, y) <= slack;
}

double tilde_entropy(std::span<const double> x) {
    double acc = 0.0;
    for (const double v : x) {
        if (v > kZeroFloor) {
            acc -= v * std::log(v);
        }
    }
    return acc;
}

double tilde_entropy(const WeightVector& x) {
    return tilde_entropy(std::span<const double>(x.values()));
}

namespace {

void check_normalized(const WeightVector& p) {
    if (std::abs(p.total() - 1.0) > tolerances().normalization) {
        raise(ErrorCode::invalid_input, "probability vector does not sum to one");
    }
}

double power_sum(const WeightVector& p, double alpha) {
    double acc = 0.0;
    for (const double v : p.values()) {
        if (v > kZeroFloor) {
            acc += std::pow(v, alpha);
        }
    }
    return acc;
}

} // namespace

double shannon(const WeightVector& p) {
    check_normalized(p);
    return tilde_entropy(p);
}

double renyi(const WeightVector& p, double alpha) {
    check_normalized(p);
    if (!(alpha >= 0.0)) {
        raise(ErrorCode::unsupported_order, "Renyi order must be non-negative");
    }
    if (alpha == 1.0) {
        return tilde_entropy(p);
    }
    return std::log(power_sum(p, alpha)) / (1.0 - alpha);
}

double tsallis(const WeightVector& p, double alpha) {
    check_normalized(p);
    if (!(alpha >= 0.0)) {
        raise(ErrorCode::unsupported_order, "Tsallis order must be non-negative");
    }
    if (alpha == 1.0) {
        return tilde_entropy(p);
    }
    return (power_sum(p, alpha) - 1.0) / (1.0 - alpha);
}

namespace {

Eigen::MatrixXd validated_joint(Eigen::MatrixXd m) {
    if (m.rows() < 1 || m.cols() < 1) {
        raise(ErrorCode::invalid_input, "joint distribution must be non-empty");
    }
    double sum = 0.0;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            double& v = m(r, c);
            if (!std::isfinite(v)) {
                raise(ErrorCode::invalid_input, "joint distribution has non-finite entries");
            }
            if (v < -1e-12) {
                raise(ErrorCode::invalid_input, "joint distribution entry below -1e-12");
            }
            if (v < 0.0) {
                v = 0.0;
            }
            sum += v;
        }
    }
    if (std::abs(sum - 1.0) > tolerances().normalization) {
        raise(ErrorCode::invalid_input, "joint distribution does not sum to one");
    }
    return m;
}

std::vector<double> row_sums(const Eigen::MatrixXd& m) {
    const Eigen::VectorXd s = m.rowwise().sum();
    return std::vector<double>(s.data(), s.data() + s.size());
}

std::vector<double> col_sums(const Eigen::MatrixXd& m) {
    const Eigen::VectorXd s = m.colwise().sum();
    return std::vector<double>(s.data(), s.data() + s.size());
}

} // namespace

JointDistribution::JointDistribution(Eigen::MatrixXd matrix)
    : matrix_(validated_joint(std::move(matrix))),
      rows_(row_sums(matrix_)),
      cols_(col_sums(matrix_)) {}

double mutual_information(const JointDistribution& p) {
    const double h_rows = tilde_entropy(p.row_marginal());
    const double h_cols = tilde_entropy(p.col_marginal());
    const double h_joint =
        tilde_entropy(std::span<const double>(p.matrix().data(),
                                              static_cast<std::size_t>(p.matrix().size())));
    return std::max(0.0, h_rows + h_cols - h_joint);
}

} // namespace majeur::majorize
