#pragma once

#include <cstdint>
#include <random>

#include "syncma/linalg.hpp"

namespace syncma {

/// Seeded random stream owned by exactly one trial at a time.
///
/// Determinism contract: for a fixed seed the call sequence produces the same
/// values on every run of the same build. Uniforms take the top 53 bits of an
/// mt19937_64 draw; normals use the Marsaglia polar method on those uniforms
/// (with the spare deviate cached), so no library-specific distribution code
/// is involved.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform double in [0, 1).
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal deviate.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        has_spare_ = true;
        return u * f;
    }

    Vec normal_vec(Eigen::Index n) {
        Vec z(n);
        for (Eigen::Index i = 0; i < n; ++i) z[i] = normal();
        return z;
    }

    Vec uniform_vec(Eigen::Index n, double lo, double hi) {
        Vec x(n);
        for (Eigen::Index i = 0; i < n; ++i) x[i] = uniform(lo, hi);
        return x;
    }

  private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// Stream splitter for auxiliary seeds (shift vectors etc.) so they never
/// collide with the per-trial streams seeded at base_seed + trial_index.
inline std::uint64_t derived_seed(std::uint64_t base, std::uint64_t salt) {
    std::uint64_t z = base + salt + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace syncma
