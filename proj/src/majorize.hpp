#pragma once

#include <Eigen/Dense>

#include <span>
#include <vector>

namespace majeur::majorize {

/// Non-negative vector with a cached total. Totals other than one are
/// allowed (direct sums of two probability vectors have total two). Entries
/// in [-1e-12, 0) are clamped to zero.
class WeightVector {
  public:
    explicit WeightVector(std::vector<double> values);

    const std::vector<double>& values() const noexcept { return values_; }
    double total() const noexcept { return total_; }
    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }

  private:
    std::vector<double> values_;
    double total_ = 0.0;
};

/// Largest prefix-sum excess max_k (sum_{i<=k} x_i^v - sum_{i<=k} y_i^v)
/// after sorting both vectors non-increasing and zero-padding to a common
/// length. Non-positive when x is majorized by y.
double majorization_excess(const WeightVector& x, const WeightVector& y);

/// True iff x is majorized by y: every partial-sum excess is at most
/// `slack`. Totals differing by more than `slack` are not comparable.
bool is_majorized_by(const WeightVector& x, const WeightVector& y, double slack);

/// -sum x ln x with 0 ln 0 := 0; defined for any non-negative vector.
double tilde_entropy(std::span<const double> x);
double tilde_entropy(const WeightVector& x);

/// Shannon entropy in nats; requires total within the normalization
/// tolerance of one.
double shannon(const WeightVector& p);

/// Renyi entropy of order alpha >= 0 in nats; alpha = 1 is the Shannon
/// limit, alpha = 0 counts the support.
double renyi(const WeightVector& p, double alpha);

/// Havrda-Charvat / Tsallis entropy of order alpha >= 0; alpha = 1 is the
/// Shannon limit.
double tsallis(const WeightVector& p, double alpha);

/// Joint distribution of two discrete variables: non-negative matrix with
/// entries summing to one; marginals are computed on construction.
class JointDistribution {
  public:
    explicit JointDistribution(Eigen::MatrixXd matrix);

    const Eigen::MatrixXd& matrix() const noexcept { return matrix_; }
    const WeightVector& row_marginal() const noexcept { return rows_; }
    const WeightVector& col_marginal() const noexcept { return cols_; }

  private:
    Eigen::MatrixXd matrix_;
    WeightVector rows_;
    WeightVector cols_;
};

/// I(P) = H(rows) + H(cols) - H(entries), clamped at zero.
double mutual_information(const JointDistribution& p);

} // namespace majeur::majorize
