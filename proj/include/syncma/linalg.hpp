#pragma once

#include <Eigen/Dense>

#include "syncma/errors.hpp"

namespace syncma {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// (C + C^T) / 2. Applied to every covariance before it is stored, so that
/// floating-point asymmetry never accumulates.
inline Mat symmetrized(const Mat& C) { return 0.5 * (C + C.transpose()); }

/// v w^T + w v^T.
inline Mat sym_outer(const Vec& v, const Vec& w) {
    return v * w.transpose() + w * v.transpose();
}

/// Lower-triangular A with A A^T = C.
///
/// Plain left-looking Cholesky; throws NotPositiveDefinite on the first
/// nonpositive pivot, which is how covariance degeneration surfaces.
Mat cholesky(const Mat& C);

/// True iff a Cholesky factorization succeeds with every pivot above the
/// scale-relative floor 1e-14 * trace(C) / n.
bool is_spd(const Mat& C);

inline void require_square(const Mat& C, const char* who) {
    if (C.rows() != C.cols()) throw DimensionMismatch(std::string(who) + ": matrix not square");
}

}  // namespace syncma
