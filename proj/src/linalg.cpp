#include "syncma/linalg.hpp"

#include <cmath>
#include <optional>

namespace syncma {

namespace {

// Shared factorization loop. Returns the factor if every pivot exceeds
// min_pivot, nullopt otherwise.
std::optional<Mat> factor(const Mat& C, double min_pivot) {
    const Eigen::Index n = C.rows();
    Mat L = Mat::Zero(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        double pivot = C(j, j) - L.row(j).head(j).squaredNorm();
        if (!(pivot > min_pivot)) return std::nullopt;
        L(j, j) = std::sqrt(pivot);
        for (Eigen::Index i = j + 1; i < n; ++i) {
            L(i, j) = (C(i, j) - L.row(i).head(j).dot(L.row(j).head(j))) / L(j, j);
        }
    }
    return L;
}

}  // namespace

Mat cholesky(const Mat& C) {
    require_square(C, "cholesky");
    auto L = factor(C, 0.0);
    if (!L) throw NotPositiveDefinite("cholesky: nonpositive pivot, matrix is not SPD");
    return *L;
}

bool is_spd(const Mat& C) {
    require_square(C, "is_spd");
    const double floor = 1e-14 * C.trace() / static_cast<double>(C.rows());
    return factor(C, floor).has_value();
}

}  // namespace syncma
