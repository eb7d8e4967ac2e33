#pragma once

#include <vector>

#include "syncma/linalg.hpp"
#include "syncma/rng.hpp"

namespace syncma {

/// Search distribution N(m, C). C must be SPD (Cholesky succeeds).
struct GaussianParams {
    Vec m;
    Mat C;

    Eigen::Index dim() const { return m.size(); }
};

/// count samples x_i = m + A z_i with A = cholesky(C) and z_i independent
/// standard-normal vectors from rng. Deterministic per seed.
std::vector<Vec> sample_population(const GaussianParams& params, int count, Rng& rng);

/// Natural gradient of the weighted log-likelihood, mean block:
/// sum_i w_i (x_i - m). The Fisher preconditioner is already folded in, so no
/// Fisher matrix is ever materialized.
Vec nat_grad_mean(const std::vector<Vec>& samples, const std::vector<double>& weights,
                  const GaussianParams& params);

/// Covariance block: sum_i w_i ((x_i - m)(x_i - m)^T - C). Symmetric output.
Mat nat_grad_cov(const std::vector<Vec>& samples, const std::vector<double>& weights,
                 const GaussianParams& params);

}  // namespace syncma
