#include "syncma/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "syncma/cmaes.hpp"
#include "syncma/objectives.hpp"

namespace syncma {
namespace oracle {

std::pair<Vec, Mat> kl_gradient_term(const GenerationRecord& gen, const GaussianParams& probe) {
    const Eigen::Index n = probe.dim();
    Vec g_m = Vec::Zero(n);
    Mat g_c = Mat::Zero(n, n);
    for (std::size_t i = 0; i < gen.samples.size(); ++i) {
        g_m += gen.weights[i] * (gen.samples[i] - probe.m);
        const Vec d = gen.samples[i] - probe.m;
        g_c += gen.weights[i] * (d * d.transpose() - probe.C);
    }
    return {std::move(g_m), std::move(g_c)};
}

std::pair<Vec, Mat> brute_force_grad(const HistoryBuffer& history, double lambda,
                                     const GaussianParams& probe) {
    const Eigen::Index n = probe.dim();
    const long t = history.steps();
    Vec g_m = Vec::Zero(n);
    Mat g_c = Mat::Zero(n, n);
    double decay = lambda;
    for (long tau = 1; tau <= t; ++tau) {
        const auto [m_term, c_term] =
            kl_gradient_term(history.generations[static_cast<std::size_t>(t - tau)], probe);
        g_m += decay * m_term;
        g_c += decay * c_term;
        decay *= lambda;
    }
    return {std::move(g_m), std::move(g_c)};
}

double check_memory(const SynCma& state, const HistoryBuffer& history,
                    const std::vector<GaussianParams>& probes) {
    if (state.iteration() != history.steps())
        throw DimensionMismatch("check_memory: state and history are out of lockstep");
    double worst = 0.0;
    for (const GaussianParams& probe : probes) {
        const auto [gm, gc] = state.memory_gradient(probe);
        const auto [bm, bc] = brute_force_grad(history, state.config().lambda(), probe);
        const double diff = (gm - bm).norm() + (gc - bc).norm();
        const double ref = bm.norm() + bc.norm();
        if (diff == 0.0) continue;
        worst = std::max(worst, diff / std::max(ref, 1e-12));
    }
    return worst;
}

std::pair<double, double> check_residuals(const SynCma& before, const GenerationRecord& gen,
                                          const GaussianParams& next_params) {
    const Eigen::Index n = next_params.dim();
    const Vec& m = before.mean();
    const Vec& m1 = next_params.m;
    const Mat& c1 = next_params.C;
    const double mass = before.history_mass();

    Vec d_w = Vec::Zero(n);
    Vec r_m = Vec::Zero(n);
    Mat r_c = Mat::Zero(n, n);
    for (std::size_t i = 0; i < gen.samples.size(); ++i) {
        d_w += gen.weights[i] * (gen.samples[i] - m);
        r_m += gen.weights[i] * (gen.samples[i] - m1);
        const Vec d = gen.samples[i] - m1;
        r_c += gen.weights[i] * (d * d.transpose() - c1);
    }
    r_m += before.eta_m() * (m - m1) + mass * (before.s_m_hat() - m1);

    const Vec& m_star = before.config().q_eval_point == QEvalPoint::CurrentMean ? m : m1;
    r_c += before.eta_c() * (before.covariance() + (m - m1) * (m - m1).transpose() - c1);
    r_c += before.memory_cov_at(m_star) - mass * c1;

    const double m_scale = std::max(d_w.norm(), 1e-12);
    const double c_scale = std::max(before.covariance().norm(), 1e-12);
    return {r_m.norm() / m_scale, r_c.norm() / c_scale};
}

GaussianParams random_probe(const GaussianParams& params, Rng& rng) {
    const Eigen::Index n = params.dim();
    Mat a(n, n);
    for (Eigen::Index i = 0; i < n; ++i) a.row(i) = 0.3 * rng.normal_vec(n).transpose();
    GaussianParams probe;
    probe.m = params.m + rng.normal_vec(n);
    probe.C = symmetrized(params.C + a * a.transpose() + 0.01 * Mat::Identity(n, n));
    return probe;
}

VerifyReport run_verification(int dim, int steps, double lambda0, std::uint64_t seed,
                              QEvalPoint mode) {
    Rng rng(seed);
    SynCmaConfig config;
    config.lambda0 = lambda0;
    config.z_m = std::max(10.0, lambda0 + 2.0);
    config.q_eval_point = mode;
    const ObjectiveSpec sphere{Objective::Sphere, dim, Vec::Zero(dim), 1L << 40};

    SynCma opt(rng.uniform_vec(dim, -2.0, 2.0), config);
    HistoryBuffer history;
    VerifyReport report;
    for (int step = 0; step < steps; ++step) {
        GenerationRecord gen;
        gen.mean_at_sampling = opt.mean();
        gen.samples = opt.ask(rng);
        for (const Vec& x : gen.samples) gen.values.push_back(evaluate(sphere, x));
        gen.weights = assign(gen.values, opt.config().weight_scheme);

        const SynCma before = opt;
        opt.tell(gen);
        const auto [r_m, r_c] = check_residuals(before, gen, opt.params());
        report.max_mean_residual = std::max(report.max_mean_residual, r_m);
        report.max_cov_residual = std::max(report.max_cov_residual, r_c);

        history.push(std::move(gen));
        std::vector<GaussianParams> probes;
        for (int p = 0; p < 10; ++p) probes.push_back(random_probe(opt.params(), rng));
        report.max_memory_dev = std::max(report.max_memory_dev,
                                         check_memory(opt, history, probes));
    }
    return report;
}

double reduction_bridge_max_dev(int dim, int generations, std::uint64_t seed) {
    Rng rng(seed);
    SynCmaConfig config;
    config.lambda0 = 0.0;
    SynCma opt(rng.uniform_vec(dim, -1.0, 1.0), config);
    const double z_m = config.z_m;
    const double z_c = opt.eta_c() + 1.0;
    const double c_mu = 1.0 / z_c;

    double worst = 0.0;
    for (int g = 0; g < generations; ++g) {
        GenerationRecord gen;
        gen.mean_at_sampling = opt.mean();
        gen.samples = opt.ask(rng);
        std::vector<double> raw(gen.samples.size());
        for (std::size_t i = 0; i < raw.size(); ++i) raw[i] = rng.uniform();
        gen.values = raw;
        gen.weights = assign(raw, opt.config().weight_scheme);

        Vec d_w = Vec::Zero(dim);
        for (std::size_t i = 0; i < gen.samples.size(); ++i) {
            d_w += gen.weights[i] * (gen.samples[i] - opt.mean());
        }
        const Mat correction =
            (2.0 - z_c / z_m) / (z_c * z_m) * (d_w * d_w.transpose());
        const Mat rank_mu =
            rank_mu_update(opt.covariance(), gen.samples, gen.weights, opt.mean(), c_mu);
        const GaussianParams reduced = opt.reduced_update(gen);
        worst = std::max(worst, (reduced.C + correction - rank_mu).cwiseAbs().maxCoeff());
        opt.tell(gen);
    }
    return worst;
}

}  // namespace oracle
}  // namespace syncma
