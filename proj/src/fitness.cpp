#include "syncma/fitness.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace syncma {

std::vector<int> rank_ascending(const std::vector<double>& values) {
    for (double v : values) {
        if (!std::isfinite(v)) throw NonFiniteValue("rank_ascending: non-finite objective value");
    }
    std::vector<int> idx(values.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return values[static_cast<std::size_t>(a)] <
                                                values[static_cast<std::size_t>(b)]; });
    return idx;
}

std::vector<double> compute_weights(const WeightScheme& scheme, int population) {
    const int mu = scheme.resolved_mu(population);
    if (mu < 1 || mu > population)
        throw ConfigError("compute_weights: mu must be in [1, N]");
    std::vector<double> w(static_cast<std::size_t>(population), 0.0);
    double sum = 0.0;
    for (int k = 1; k <= mu; ++k) {
        const double wk = std::max(0.0, std::log(mu + 0.5) - std::log(static_cast<double>(k)));
        w[static_cast<std::size_t>(k - 1)] = wk;
        sum += wk;
    }
    for (double& wk : w) wk /= sum;
    return w;
}

std::vector<double> assign(const std::vector<double>& values, const WeightScheme& scheme) {
    const std::vector<int> order = rank_ascending(values);
    const std::vector<double> by_rank = compute_weights(scheme, static_cast<int>(values.size()));
    std::vector<double> out(values.size());
    for (std::size_t rank = 0; rank < order.size(); ++rank) {
        out[static_cast<std::size_t>(order[rank])] = by_rank[rank];
    }
    return out;
}

}  // namespace syncma
