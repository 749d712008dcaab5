#pragma once

#include <Eigen/Dense>

#include <numeric>
#include <span>
#include <vector>

namespace majeur {

/// Calls fn(span) for every strictly increasing r-subset of {0,...,n-1},
/// in lexicographic order. r must satisfy 1 <= r <= n.
template <typename F>
void for_each_combination(std::size_t n, std::size_t r, F&& fn) {
    std::vector<Eigen::Index> idx(r);
    std::iota(idx.begin(), idx.end(), Eigen::Index{0});
    while (true) {
        fn(std::span<const Eigen::Index>(idx));
        std::size_t i = r;
        while (i > 0 &&
               idx[i - 1] == static_cast<Eigen::Index>(n - r + i - 1)) {
            --i;
        }
        if (i == 0) {
            break;
        }
        ++idx[i - 1];
        for (std::size_t j = i; j < r; ++j) {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

} // namespace majeur
