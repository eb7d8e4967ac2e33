#pragma once

#include <vector>

#include "syncma/linalg.hpp"

namespace syncma {

/// One evaluated batch: the samples, their objective values, the normalized
/// rank weights aligned to sample order, and the mean the batch was drawn
/// from. Optimizers consume records; they never evaluate objectives
/// themselves, which is also the hook for injecting externally constructed
/// samples in tests.
struct GenerationRecord {
    std::vector<Vec> samples;
    std::vector<double> values;
    std::vector<double> weights;
    Vec mean_at_sampling;
};

}  // namespace syncma
