#include "syncma/syncma.hpp"

#include <cmath>

#include "syncma/cmaes.hpp"

namespace syncma {

namespace {

double resolve_eta_c(const SynCmaConfig& config, int dim) {
    const int N = config.resolved_population(dim);
    double z_c_inf;
    switch (config.eta_c_mode.kind) {
        case EtaCMode::Kind::Absolute:
            return config.eta_c_mode.value;
        case EtaCMode::Kind::CmaScaled: {
            const CmaRates rates = cma_default_rates(dim, N, config.weight_scheme);
            z_c_inf = config.eta_c_mode.value / rates.c_mu;
            return z_c_inf - config.lambda0 - 1.0;
        }
    }
    throw ConfigError("eta_c_mode: unknown kind");
}

}  // namespace

SynCma::SynCma(Vec m0, SynCmaConfig config)
    : config_(std::move(config)),
      params_{std::move(m0), Mat()},
      s_m_hat_(params_.m),
      s_c_hat_(params_.m) {
    const Eigen::Index n = params_.m.size();
    if (n < 1) throw ConfigError("SynCma: empty initial mean");
    if (!params_.m.allFinite()) throw NonFiniteValue("SynCma: non-finite initial mean");
    if (config_.lambda0 < 0.0) throw ConfigError("SynCma: lambda0 must be >= 0");
    if (config_.sigma0 <= 0.0) throw ConfigError("SynCma: sigma0 must be > 0");
    eta_m_ = config_.z_m - config_.lambda0 - 1.0;
    if (eta_m_ <= 0.0) throw ConfigError("SynCma: z_m must exceed lambda0 + 1");
    eta_c_ = resolve_eta_c(config_, static_cast<int>(n));
    if (eta_c_ <= 0.0) throw ConfigError("SynCma: resolved eta_c must be > 0");

    params_.C = config_.sigma0 * Mat::Identity(n, n);
    q1_ = Mat::Zero(n, n);
    q2_ = Vec::Zero(n);
}

double SynCma::history_mass() const {
    const double lam = config_.lambda();
    return config_.lambda0 * (1.0 - std::pow(lam, static_cast<double>(t_)));
}

std::vector<Vec> SynCma::ask(Rng& rng) const {
    const int N = config_.resolved_population(static_cast<int>(params_.dim()));
    return sample_population(params_, N, rng);
}

void SynCma::validate_generation(const GenerationRecord& gen) const {
    if (gen.samples.empty()) throw DimensionMismatch("tell: empty generation");
    if (gen.samples.size() != gen.weights.size())
        throw DimensionMismatch("tell: sample/weight count mismatch");
    if (gen.mean_at_sampling != params_.m)
        throw DimensionMismatch("tell: generation was not sampled at the current mean");
    double sum = 0.0;
    for (double w : gen.weights) {
        if (!(w >= 0.0)) throw ConfigError("tell: negative weight");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-9) throw ConfigError("tell: weights must sum to 1");
    for (const Vec& x : gen.samples) {
        if (x.size() != params_.dim()) throw DimensionMismatch("tell: sample dimension mismatch");
    }
}

Mat SynCma::memory_cov_at(const Vec& m_star) const {
    const double mass = history_mass();
    const Vec r = s_c_hat_ - m_star;
    return mass * (r * r.transpose()) + q1_ + sym_outer(q2_, m_star) +
           q3_ * (m_star * m_star.transpose());
}

std::pair<Vec, Mat> SynCma::memory_gradient(const GaussianParams& probe) const {
    if (probe.m.size() != params_.dim())
        throw DimensionMismatch("memory_gradient: probe dimension mismatch");
    const double mass = history_mass();
    Vec g_m = mass * (s_m_hat_ - probe.m);
    Mat g_c = memory_cov_at(probe.m) - mass * probe.C;
    return {std::move(g_m), symmetrized(g_c)};
}

void SynCma::tell(const GenerationRecord& gen) {
    validate_generation(gen);
    const Eigen::Index n = params_.dim();
    const double lambda0 = config_.lambda0;
    const double lam = config_.lambda();
    const double mass = history_mass();

    const Vec& m = params_.m;
    Vec d_w = Vec::Zero(n);
    for (std::size_t i = 0; i < gen.samples.size(); ++i) {
        d_w += gen.weights[i] * (gen.samples[i] - m);
    }

    // Mean: solve the trust-region stationarity condition. The denominator
    // carries the accumulated history mass, so it grows from eta_m + 1 to the
    // configured z_m.
    const double z_m_t = eta_m_ + mass + 1.0;
    const Vec beta = (d_w + mass * (s_m_hat_ - m)) / z_m_t;
    const Vec m_next = m + beta;

    // Covariance: blend the shifted previous covariance, the reweighted
    // sample scatter about the new mean, and the memory terms.
    const double z_c_t = eta_c_ + mass + 1.0;
    Mat scatter = Mat::Zero(n, n);
    for (std::size_t i = 0; i < gen.samples.size(); ++i) {
        const Vec d = gen.samples[i] - m - beta;
        scatter += gen.weights[i] * (d * d.transpose());
    }
    const Vec& m_star = config_.q_eval_point == QEvalPoint::CurrentMean ? m : m_next;
    Mat C_next = (eta_c_ / z_c_t) * (params_.C + beta * beta.transpose()) +
                 (scatter + memory_cov_at(m_star)) / z_c_t;
    C_next = symmetrized(C_next);
    if (!is_spd(C_next)) throw CovarianceDegenerate("tell: updated covariance is not SPD");

    // Evolve the memory with this generation's statistics.
    if (lambda0 > 0.0) {
        const double zeta = std::sqrt(lam);
        const double alpha = std::sqrt(1.0 - lam);
        const Vec d_w_hat = d_w + m;
        Mat v = Mat::Zero(n, n);
        for (std::size_t i = 0; i < gen.samples.size(); ++i) {
            const Vec d = gen.samples[i] - m - d_w;
            v += gen.weights[i] * (d * d.transpose());
        }
        const Vec s_m_next = (mass * s_m_hat_ + d_w_hat) / (mass + 1.0);
        const Vec s_c_next = zeta * s_c_hat_ + alpha * d_w_hat;
        // The (lambda0 - mass) terms die off geometrically; past the burn-in
        // this is the steady-state recurrence lam*Q1 + lam*V - lambda0*zeta*
        // alpha*(d_w_hat o s_c_hat).
        Mat q1_next = lam * q1_ + lam * v +
                      lam * (1.0 - lam) * (lambda0 - mass) *
                          (d_w_hat * d_w_hat.transpose() - s_c_hat_ * s_c_hat_.transpose()) -
                      lam * (mass + 1.0) * zeta * alpha * sym_outer(s_c_hat_, d_w_hat);
        const double mass_next = lam * (mass + 1.0);
        q2_ = mass_next * (s_c_next - s_m_next);
        q3_ = lam * q3_;
        q1_ = symmetrized(q1_next);
        s_m_hat_ = s_m_next;
        s_c_hat_ = s_c_next;
    }

    params_.m = m_next;
    params_.C = C_next;
    ++t_;
}

GaussianParams SynCma::reduced_update(const GenerationRecord& gen) const {
    validate_generation(gen);
    const Eigen::Index n = params_.dim();
    const double lambda0 = config_.lambda0;
    const double z_m = config_.z_m;
    const double z_c = eta_c_ + lambda0 + 1.0;

    const Vec& m = params_.m;
    Vec d_w = Vec::Zero(n);
    Mat d_outer = Mat::Zero(n, n);
    for (std::size_t i = 0; i < gen.samples.size(); ++i) {
        const Vec d = gen.samples[i] - m;
        d_w += gen.weights[i] * d;
        d_outer += gen.weights[i] * (d * d.transpose());
    }
    const Vec s_c = s_c_hat_ - m;
    Mat C_next = (eta_c_ / z_c) * params_.C + d_outer / z_c +
                 (lambda0 / z_c) * (s_c * s_c.transpose()) -
                 (lambda0 / (z_c * z_m)) * sym_outer(d_w, s_c) -
                 (2.0 - z_c / z_m) / (z_c * z_m) * (d_w * d_w.transpose());
    return {m + d_w / z_m, symmetrized(C_next)};
}

}  // namespace syncma
