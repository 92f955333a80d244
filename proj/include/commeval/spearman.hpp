#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

namespace commeval {

/// Fractional ranks (1-based, ties share the mean of their positions).
/// +infinity sorts above every finite value; NaN is not allowed.
template <class Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> fractional_ranks(
    const Eigen::MatrixBase<Derived>& values) {
    using Scalar = typename Derived::Scalar;
    const Eigen::Index n = values.size();
    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index a, Eigen::Index b) { return values(a) < values(b); });

    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> ranks(n);
    Eigen::Index i = 0;
    while (i < n) {
        Eigen::Index j = i + 1;
        while (j < n && values(order[j]) == values(order[i])) ++j;
        // positions i..j-1 (0-based) share rank mean((i+1)..j)
        const Scalar rank = Scalar(i + 1 + j) / Scalar(2);
        for (Eigen::Index k = i; k < j; ++k) ranks(order[k]) = rank;
        i = j;
    }
    return ranks;
}

/// Pearson correlation of fractional ranks. std::nullopt when either input is
/// constant. Throws std::invalid_argument on unequal lengths or fewer than 2 entries.
std::optional<double> spearman(const Eigen::Ref<const Eigen::VectorXd>& a,
                               const Eigen::Ref<const Eigen::VectorXd>& b);

inline std::optional<double> spearman(std::span<const double> a, std::span<const double> b) {
    return spearman(Eigen::Map<const Eigen::VectorXd>(a.data(), static_cast<Eigen::Index>(a.size())),
                    Eigen::Map<const Eigen::VectorXd>(b.data(), static_cast<Eigen::Index>(b.size())));
}

} // namespace commeval
