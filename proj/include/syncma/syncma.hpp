#pragma once

#include <utility>

#include "syncma/fitness.hpp"
#include "syncma/gaussian.hpp"
#include "syncma/generation.hpp"

namespace syncma {

/// Where the memory covariance gradient is evaluated inside the covariance
/// update: at the pre-update mean (default) or at the freshly computed one.
enum class QEvalPoint { CurrentMean, NextMean };

/// How the covariance multiplier eta_c is chosen: a literal value, or scaled
/// off the standard CMA-ES rank-mu rate so that z_c = factor / c_mu.
struct EtaCMode {
    enum class Kind { Absolute, CmaScaled } kind = Kind::CmaScaled;
    double value = 2.0;

    static EtaCMode absolute(double eta_c) { return {Kind::Absolute, eta_c}; }
    static EtaCMode cma_scaled(double factor = 2.0) { return {Kind::CmaScaled, factor}; }
};

struct SynCmaConfig {
    /// History weight. The decay factor is lambda = lambda0 / (lambda0 + 1).
    double lambda0 = 2.0;
    /// Asymptotic mean denominator; the mean multiplier is
    /// eta_m = z_m - lambda0 - 1, which must stay positive.
    double z_m = 10.0;
    EtaCMode eta_c_mode = EtaCMode::cma_scaled();
    /// Initial covariance scale: C = sigma0 * I.
    double sigma0 = 0.1;
    /// Batch size; 0 selects 2 * dim.
    int population = 0;
    WeightScheme weight_scheme{};
    QEvalPoint q_eval_point = QEvalPoint::CurrentMean;

    double lambda() const { return lambda0 > 0.0 ? lambda0 / (lambda0 + 1.0) : 0.0; }
    int resolved_population(int dim) const { return population > 0 ? population : 2 * dim; }
};

/// Full-covariance Gaussian evolution strategy whose mean and covariance
/// updates jointly solve a KL-trust-region condition that carries an
/// exponentially decayed history of past generations. The history enters
/// through closed-form memory terms evolved in O(n^2) per step; no past
/// generation is ever stored.
class SynCma {
  public:
    SynCma(Vec m0, SynCmaConfig config);

    /// N candidates from N(m, C).
    std::vector<Vec> ask(Rng& rng) const;

    /// Consume one generation: update (m, C), then evolve the memory terms
    /// with this generation's statistics. Throws CovarianceDegenerate if the
    /// updated covariance fails the SPD check.
    void tell(const GenerationRecord& gen);

    /// Closed-form memory gradient (mean block, covariance block) at an
    /// arbitrary probe distribution. Exactly reproduces the decayed sum of
    /// past per-generation KL gradients, which is what the brute-force
    /// oracle replays.
    std::pair<Vec, Mat> memory_gradient(const GaussianParams& probe) const;

    /// Covariance block of the memory gradient without its -mass * C term,
    /// evaluated at mean point m_star. This is the piece that enters the
    /// covariance update; the residual oracle uses it too.
    Mat memory_cov_at(const Vec& m_star) const;

    /// Partial-history variant of the update (history kept only in the
    /// rank-one covariance term). Returns the parameters it would produce;
    /// used by the reduction bridge test only.
    GaussianParams reduced_update(const GenerationRecord& gen) const;

    const GaussianParams& params() const { return params_; }
    const Vec& mean() const { return params_.m; }
    const Mat& covariance() const { return params_.C; }
    long iteration() const { return t_; }
    const SynCmaConfig& config() const { return config_; }

    /// Accumulated decay mass sum_{tau=1..t} lambda^tau = lambda0 (1 - lambda^t).
    /// Grows from 0 to lambda0 and multiplies every memory term.
    double history_mass() const;

    const Vec& s_m_hat() const { return s_m_hat_; }
    const Vec& s_c_hat() const { return s_c_hat_; }
    const Mat& q1() const { return q1_; }
    const Vec& q2() const { return q2_; }
    double q3() const { return q3_; }

    double eta_m() const { return eta_m_; }
    double eta_c() const { return eta_c_; }

  private:
    void validate_generation(const GenerationRecord& gen) const;

    SynCmaConfig config_;
    GaussianParams params_;
    long t_ = 0;
    double eta_m_;
    double eta_c_;

    // Memory terms. s_m_hat is the decayed reweighted mean, s_c_hat its
    // sqrt-mixed counterpart feeding the rank-one covariance term; q1/q2/q3
    // complete the closed form so that memory_gradient is exact at every t.
    Vec s_m_hat_;
    Vec s_c_hat_;
    Mat q1_;
    Vec q2_;
    double q3_ = 0.0;
};

}  // namespace syncma
