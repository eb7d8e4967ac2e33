#pragma once

#include <vector>

#include "syncma/errors.hpp"

namespace syncma {

/// Rank-based recombination weights. mu = 0 selects the default floor(N/2).
struct WeightScheme {
    int mu = 0;

    int resolved_mu(int population) const { return mu > 0 ? mu : population / 2; }
};

/// Indices of `values` in ascending order (minimization), ties broken by
/// original index. Throws NonFiniteValue on NaN/inf input.
std::vector<int> rank_ascending(const std::vector<double>& values);

/// Log-rank weights by rank position: w_k = max(0, ln(mu + 1/2) - ln k) for
/// k = 1..mu, zero beyond, normalized to sum 1.
std::vector<double> compute_weights(const WeightScheme& scheme, int population);

/// Normalized fitness per sample, aligned to the input order: sample i gets
/// the weight of its ascending rank position. Depends on ranks only, so any
/// strictly increasing transform of the values leaves the output unchanged.
std::vector<double> assign(const std::vector<double>& values, const WeightScheme& scheme);

}  // namespace syncma
