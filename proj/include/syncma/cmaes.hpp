#pragma once

#include "syncma/fitness.hpp"
#include "syncma/gaussian.hpp"
#include "syncma/generation.hpp"

namespace syncma {

/// Standard CMA-ES learning rates as functions of dimension and population,
/// with log-rank weights.
struct CmaRates {
    double mu_eff;
    double c_sigma;
    double d_sigma;
    double c_c;
    double c_1;
    double c_mu;
    double chi_n;  // E||N(0, I_n)||
};

CmaRates cma_default_rates(int dim, int population, const WeightScheme& scheme);

/// Textbook CMA-ES (rank-mu + rank-one covariance adaptation, cumulative
/// step-size control) in the theta = (m, sigma^2 Sigma) parameterization.
/// Comparison baseline; no restarts, no active weights.
class CmaEs {
  public:
    CmaEs(Vec m0, double sigma0, int population, WeightScheme scheme = {});

    std::vector<Vec> ask(Rng& rng) const;
    void tell(const GenerationRecord& gen);

    const Vec& mean() const { return m_; }
    double sigma() const { return sigma_; }
    const Mat& shape() const { return sigma_mat_; }
    /// Full sampled covariance sigma^2 Sigma.
    Mat covariance() const { return sigma_ * sigma_ * sigma_mat_; }
    long iteration() const { return t_; }
    int population() const { return population_; }
    const CmaRates& rates() const { return rates_; }
    const WeightScheme& weight_scheme() const { return scheme_; }

  private:
    void refresh_eigensystem();

    Vec m_;
    double sigma_;
    Mat sigma_mat_;
    Vec p_sigma_;
    Vec p_c_;
    long t_ = 0;
    int population_;
    WeightScheme scheme_;
    CmaRates rates_;

    // Eigendecomposition of sigma_mat_, refreshed after every tell.
    Mat eigvecs_;
    Vec eig_sqrt_;
};

/// Pure rank-mu covariance step on the full covariance (no rank-one term, no
/// step-size path): (1 - c_mu) C + c_mu sum_i w_i d_i d_i^T with
/// d_i = x_i - m.
Mat rank_mu_update(const Mat& C, const std::vector<Vec>& samples,
                   const std::vector<double>& weights, const Vec& m, double c_mu);

}  // namespace syncma
