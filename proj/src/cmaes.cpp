#include "syncma/cmaes.hpp"

#include <cmath>

#include "syncma/errors.hpp"

namespace syncma {

CmaRates cma_default_rates(int dim, int population, const WeightScheme& scheme) {
    if (dim < 1 || population < 2) throw ConfigError("cma_default_rates: bad dim/population");
    const double n = static_cast<double>(dim);
    const std::vector<double> w = compute_weights(scheme, population);
    double sq = 0.0;
    for (double wi : w) sq += wi * wi;
    const double mu_eff = 1.0 / sq;

    CmaRates r;
    r.mu_eff = mu_eff;
    r.c_sigma = (mu_eff + 2.0) / (n + mu_eff + 5.0);
    r.d_sigma = 1.0 + 2.0 * std::max(0.0, std::sqrt((mu_eff - 1.0) / (n + 1.0)) - 1.0) + r.c_sigma;
    r.c_c = (4.0 + mu_eff / n) / (n + 4.0 + 2.0 * mu_eff / n);
    r.c_1 = 2.0 / ((n + 1.3) * (n + 1.3) + mu_eff);
    r.c_mu = std::min(1.0 - r.c_1,
                      2.0 * (mu_eff - 2.0 + 1.0 / mu_eff) / ((n + 2.0) * (n + 2.0) + mu_eff));
    r.chi_n = std::sqrt(n) * (1.0 - 1.0 / (4.0 * n) + 1.0 / (21.0 * n * n));
    return r;
}

CmaEs::CmaEs(Vec m0, double sigma0, int population, WeightScheme scheme)
    : m_(std::move(m0)),
      sigma_(sigma0),
      population_(population),
      scheme_(scheme) {
    const Eigen::Index n = m_.size();
    if (n < 1) throw ConfigError("CmaEs: empty initial mean");
    if (sigma0 <= 0.0) throw ConfigError("CmaEs: sigma0 must be > 0");
    if (population_ < 2) throw ConfigError("CmaEs: population must be >= 2");
    sigma_mat_ = Mat::Identity(n, n);
    p_sigma_ = Vec::Zero(n);
    p_c_ = Vec::Zero(n);
    rates_ = cma_default_rates(static_cast<int>(n), population_, scheme_);
    eigvecs_ = Mat::Identity(n, n);
    eig_sqrt_ = Vec::Ones(n);
}

void CmaEs::refresh_eigensystem() {
    Eigen::SelfAdjointEigenSolver<Mat> es(sigma_mat_);
    if (es.info() != Eigen::Success || es.eigenvalues().minCoeff() <= 0.0)
        throw CovarianceDegenerate("CmaEs: covariance eigendecomposition failed");
    eigvecs_ = es.eigenvectors();
    eig_sqrt_ = es.eigenvalues().cwiseSqrt();
}

std::vector<Vec> CmaEs::ask(Rng& rng) const {
    std::vector<Vec> xs;
    xs.reserve(static_cast<std::size_t>(population_));
    for (int i = 0; i < population_; ++i) {
        const Vec z = rng.normal_vec(m_.size());
        xs.push_back(m_ + sigma_ * (eigvecs_ * (eig_sqrt_.asDiagonal() * z)));
    }
    return xs;
}

void CmaEs::tell(const GenerationRecord& gen) {
    if (gen.samples.size() != gen.weights.size())
        throw DimensionMismatch("CmaEs::tell: sample/weight count mismatch");
    if (gen.mean_at_sampling != m_)
        throw DimensionMismatch("CmaEs::tell: generation was not sampled at the current mean");
    const Eigen::Index n = m_.size();
    const CmaRates& r = rates_;

    const Vec m_old = m_;
    Vec m_new = Vec::Zero(n);
    for (std::size_t i = 0; i < gen.samples.size(); ++i) {
        m_new += gen.weights[i] * gen.samples[i];
    }

    // C^{-1/2} (m' - m) / sigma via the cached eigensystem.
    const Vec y_w = (m_new - m_old) / sigma_;
    const Vec c_inv_sqrt_y = eigvecs_ * (eig_sqrt_.cwiseInverse().asDiagonal() *
                                         (eigvecs_.transpose() * y_w));

    p_sigma_ = (1.0 - r.c_sigma) * p_sigma_ +
               std::sqrt(r.c_sigma * (2.0 - r.c_sigma) * r.mu_eff) * c_inv_sqrt_y;

    const double ps_norm = p_sigma_.norm();
    const double expected = std::sqrt(
        1.0 - std::pow(1.0 - r.c_sigma, 2.0 * static_cast<double>(t_ + 1)));
    const bool hsig = ps_norm / expected / r.chi_n < 1.4 + 2.0 / (static_cast<double>(n) + 1.0);

    p_c_ = (1.0 - r.c_c) * p_c_ +
           (hsig ? std::sqrt(r.c_c * (2.0 - r.c_c) * r.mu_eff) : 0.0) * y_w;

    const double delta_hsig = (1.0 - (hsig ? 1.0 : 0.0)) * r.c_c * (2.0 - r.c_c);
    Mat rank_mu = Mat::Zero(n, n);
    for (std::size_t i = 0; i < gen.samples.size(); ++i) {
        const Vec y = (gen.samples[i] - m_old) / sigma_;
        rank_mu += gen.weights[i] * (y * y.transpose());
    }
    sigma_mat_ = (1.0 - r.c_1 - r.c_mu + r.c_1 * delta_hsig) * sigma_mat_ +
                 r.c_1 * (p_c_ * p_c_.transpose()) + r.c_mu * rank_mu;
    sigma_mat_ = symmetrized(sigma_mat_);
    if (!is_spd(sigma_mat_)) throw CovarianceDegenerate("CmaEs::tell: covariance is not SPD");

    sigma_ *= std::exp((r.c_sigma / r.d_sigma) * (ps_norm / r.chi_n - 1.0));
    m_ = m_new;
    ++t_;
    refresh_eigensystem();
}

Mat rank_mu_update(const Mat& C, const std::vector<Vec>& samples,
                   const std::vector<double>& weights, const Vec& m, double c_mu) {
    Mat acc = Mat::Zero(C.rows(), C.cols());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const Vec d = samples[i] - m;
        acc += weights[i] * (d * d.transpose());
    }
    return symmetrized((1.0 - c_mu) * C + c_mu * acc);
}

}  // namespace syncma
