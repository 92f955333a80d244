#include "commeval/spearman.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace commeval {

std::optional<double> spearman(const Eigen::Ref<const Eigen::VectorXd>& a,
                               const Eigen::Ref<const Eigen::VectorXd>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("spearman: vectors differ in length");
    if (a.size() < 2) throw std::invalid_argument("spearman: needs at least two observations");
    if (a.hasNaN() || b.hasNaN()) throw std::invalid_argument("spearman: NaN in input");

    const Eigen::VectorXd ra = fractional_ranks(a);
    const Eigen::VectorXd rb = fractional_ranks(b);
    const Eigen::VectorXd da = ra.array() - ra.mean();
    const Eigen::VectorXd db = rb.array() - rb.mean();
    const double saa = da.squaredNorm();
    const double sbb = db.squaredNorm();
    if (saa == 0.0 || sbb == 0.0) return std::nullopt;
    return std::clamp(da.dot(db) / std::sqrt(saa * sbb), -1.0, 1.0);
}

} // namespace commeval
