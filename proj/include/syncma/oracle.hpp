#pragma once

#include <utility>
#include <vector>

#include "syncma/gaussian.hpp"
#include "syncma/generation.hpp"
#include "syncma/syncma.hpp"

namespace syncma {
namespace oracle {

/// Append-only record of every generation, in order. Deliberately O(t)
/// memory: this exists to cross-check the optimizer's O(1) memory terms and
/// never appears in the optimization hot path.
struct HistoryBuffer {
    std::vector<GenerationRecord> generations;

    void push(GenerationRecord gen) { generations.push_back(std::move(gen)); }
    long steps() const { return static_cast<long>(generations.size()); }
};

/// Per-generation KL gradient with the sign that accumulates history:
/// mean block sum_i w_i (x_i - m_probe), covariance block
/// sum_i w_i ((x_i - m_probe)(x_i - m_probe)^T - C_probe).
std::pair<Vec, Mat> kl_gradient_term(const GenerationRecord& gen, const GaussianParams& probe);

/// Decayed replay over the whole history: sum_{tau=1..t} lambda^tau times the
/// KL gradient of generation t - tau at the probe. Equals the optimizer's
/// memory_gradient for the state advanced in lockstep with the buffer.
std::pair<Vec, Mat> brute_force_grad(const HistoryBuffer& history, double lambda,
                                     const GaussianParams& probe);

/// Max over probes of || memory_gradient - brute_force_grad || / || brute ||
/// (Frobenius over both blocks; exact agreement reports 0).
double check_memory(const SynCma& state, const HistoryBuffer& history,
                    const std::vector<GaussianParams>& probes);

/// Residual norms of the two stationarity conditions the update solves,
/// evaluated at next_params with the penalty term taken in expectation over
/// the pre-update distribution. Relative to ||d_w|| and ||C||. `before` is
/// the state the generation was told to, prior to that tell.
std::pair<double, double> check_residuals(const SynCma& before, const GenerationRecord& gen,
                                          const GaussianParams& next_params);

/// Random SPD perturbation of params; keeps probes in-distribution.
GaussianParams random_probe(const GaussianParams& params, Rng& rng);

struct VerifyReport {
    double max_memory_dev = 0.0;
    double max_mean_residual = 0.0;
    double max_cov_residual = 0.0;
};

/// Seeded end-to-end check: advances an optimizer and a history buffer in
/// lockstep for `steps` generations and reports the worst memory deviation
/// (10 random probes per step) and stationarity residuals seen anywhere
/// along the way.
VerifyReport run_verification(int dim, int steps, double lambda0, std::uint64_t seed,
                              QEvalPoint mode = QEvalPoint::CurrentMean);

/// Reduction bridge: with the history weight off and c_mu = 1/z_c, the
/// partial-history covariance update minus its printed d_w d_w^T correction
/// must reproduce the pure rank-mu step elementwise. Returns the max
/// elementwise deviation over `generations` random generations.
double reduction_bridge_max_dev(int dim, int generations, std::uint64_t seed);

}  // namespace oracle
}  // namespace syncma
