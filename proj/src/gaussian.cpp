#include "syncma/gaussian.hpp"

#include <stdexcept>

namespace syncma {

namespace {

void check_aligned(const std::vector<Vec>& samples, const std::vector<double>& weights,
                   const GaussianParams& params) {
    if (samples.size() != weights.size())
        throw DimensionMismatch("nat_grad: sample/weight count mismatch");
    for (const Vec& x : samples) {
        if (x.size() != params.dim()) throw DimensionMismatch("nat_grad: sample dimension mismatch");
    }
}

}  // namespace

std::vector<Vec> sample_population(const GaussianParams& params, int count, Rng& rng) {
    if (count < 2) throw std::invalid_argument("sample_population: count must be >= 2");
    const Mat A = cholesky(params.C);
    std::vector<Vec> xs;
    xs.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        xs.push_back(params.m + A * rng.normal_vec(params.dim()));
    }
    return xs;
}

Vec nat_grad_mean(const std::vector<Vec>& samples, const std::vector<double>& weights,
                  const GaussianParams& params) {
    check_aligned(samples, weights, params);
    Vec g = Vec::Zero(params.dim());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        g += weights[i] * (samples[i] - params.m);
    }
    return g;
}

Mat nat_grad_cov(const std::vector<Vec>& samples, const std::vector<double>& weights,
                 const GaussianParams& params) {
    check_aligned(samples, weights, params);
    Mat G = Mat::Zero(params.dim(), params.dim());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const Vec d = samples[i] - params.m;
        G += weights[i] * (d * d.transpose() - params.C);
    }
    return symmetrized(G);
}

}  // namespace syncma
