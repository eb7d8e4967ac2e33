#include "syncma/objectives.hpp"

#include <cmath>
#include <numbers>

#include "syncma/errors.hpp"
#include "syncma/rng.hpp"

namespace syncma {

namespace {

constexpr double kPi = std::numbers::pi;

double sphere(const Vec& y) { return y.squaredNorm(); }

double discus(const Vec& y) {
    double s = 1e6 * y[0] * y[0];
    for (Eigen::Index i = 1; i < y.size(); ++i) s += y[i] * y[i];
    return s;
}

double schwefel(const Vec& y) {
    double sum = 0.0, prod = 1.0;
    for (Eigen::Index i = 0; i < y.size(); ++i) {
        const double a = std::abs(y[i]);
        sum += a;
        prod *= a;
    }
    return sum + prod;
}

double diff_powers(const Vec& y) {
    const double n = static_cast<double>(y.size());
    double s = 0.0;
    for (Eigen::Index i = 0; i < y.size(); ++i) {
        s += std::pow(std::abs(y[i]), 2.0 + 4.0 * static_cast<double>(i) / n);
    }
    return s;
}

double bohachevsky(const Vec& y) {
    double s = 0.0;
    for (Eigen::Index i = 0; i + 1 < y.size(); ++i) {
        s += 0.7 + y[i] * y[i] + 2.0 * y[i + 1] * y[i + 1] - 0.3 * std::cos(3.0 * kPi * y[i]) -
             0.4 * std::cos(4.0 * kPi * y[i + 1]);
    }
    return s;
}

// Re-centered so the minimum sits at y = 0: w_i = 1 + y_i / 4, unique zero at
// w = 1.
double levy_montalvo(const Vec& y) {
    const Eigen::Index n = y.size();
    auto w = [&](Eigen::Index i) { return 1.0 + y[i] / 4.0; };
    auto sq = [](double v) { return v * v; };
    double s = 10.0 * sq(std::sin(kPi * w(0))) + sq(w(n - 1) - 1.0);
    for (Eigen::Index i = 0; i + 1 < n; ++i) {
        s += sq(w(i) - 1.0) * (1.0 + 10.0 * sq(std::sin(kPi * w(i + 1))));
    }
    return kPi / static_cast<double>(n) * s;
}

double rastrigin(const Vec& y) {
    double s = 10.0 * static_cast<double>(y.size());
    for (Eigen::Index i = 0; i < y.size(); ++i) {
        s += y[i] * y[i] - 10.0 * std::cos(2.0 * kPi * y[i]);
    }
    return s;
}

double ackley(const Vec& y) {
    const double n = static_cast<double>(y.size());
    double sum_sq = 0.0, sum_cos = 0.0;
    for (Eigen::Index i = 0; i < y.size(); ++i) {
        sum_sq += y[i] * y[i];
        sum_cos += std::cos(2.0 * kPi * y[i]);
    }
    return -20.0 * std::exp(-0.2 * std::sqrt(sum_sq / n)) - std::exp(sum_cos / n) + 20.0 +
           std::numbers::e;
}

double schaffer(const Vec& y) {
    double s = 0.0;
    for (Eigen::Index i = 0; i + 1 < y.size(); ++i) {
        const double z = y[i] * y[i] + y[i + 1] * y[i + 1];
        const double sz = std::sin(50.0 * std::pow(z, 0.1));
        s += std::pow(z, 0.25) * (sz * sz + 1.0);
    }
    return s;
}

// v = y + 1 places the usual all-ones optimum at y = 0.
double rosenbrock(const Vec& y) {
    const Vec v = y.array() + 1.0;
    double s = 0.0;
    for (Eigen::Index i = 1; i < v.size(); ++i) {
        const double a = v[i] - v[i - 1] * v[i - 1];
        s += 100.0 * a * a;
    }
    for (Eigen::Index i = 0; i + 1 < v.size(); ++i) {
        s += (v[i] - 1.0) * (v[i] - 1.0);
    }
    return s;
}

}  // namespace

std::string objective_name(Objective f) {
    switch (f) {
        case Objective::Sphere: return "sphere";
        case Objective::Discus: return "discus";
        case Objective::Schwefel: return "schwefel";
        case Objective::DiffPowers: return "diffpowers";
        case Objective::Bohachevsky: return "bohachevsky";
        case Objective::LevyMontalvo: return "levymontalvo";
        case Objective::Rastrigin: return "rastrigin";
        case Objective::Ackley: return "ackley";
        case Objective::Schaffer: return "schaffer";
        case Objective::Rosenbrock: return "rosenbrock";
    }
    throw ConfigError("objective_name: unknown objective");
}

Objective objective_from_name(const std::string& name) {
    for (Objective f : all_objectives()) {
        if (objective_name(f) == name) return f;
    }
    throw ConfigError("unknown objective function: " + name);
}

std::vector<Objective> all_objectives() {
    return {Objective::Sphere,       Objective::Discus,    Objective::Schwefel,
            Objective::DiffPowers,   Objective::Bohachevsky, Objective::LevyMontalvo,
            Objective::Rastrigin,    Objective::Ackley,    Objective::Schaffer,
            Objective::Rosenbrock};
}

double evaluate(const ObjectiveSpec& spec, const Vec& x) {
    if (x.size() != spec.dim) throw DimensionMismatch("evaluate: point dimension mismatch");
    const Vec y = x - spec.shift;
    switch (spec.name) {
        case Objective::Sphere: return sphere(y);
        case Objective::Discus: return discus(y);
        case Objective::Schwefel: return schwefel(y);
        case Objective::DiffPowers: return diff_powers(y);
        case Objective::Bohachevsky: return bohachevsky(y);
        case Objective::LevyMontalvo: return levy_montalvo(y);
        case Objective::Rastrigin: return rastrigin(y);
        case Objective::Ackley: return ackley(y);
        case Objective::Schaffer: return schaffer(y);
        case Objective::Rosenbrock: return rosenbrock(y);
    }
    throw ConfigError("evaluate: unknown objective");
}

ObjectiveSpec make_spec(Objective name, int dim, const ShiftMode& shift_mode, long budget,
                        std::uint64_t seed) {
    if (dim < 2) throw ConfigError("make_spec: dim must be >= 2");
    ObjectiveSpec spec{name, dim, Vec::Zero(dim), budget};
    switch (shift_mode.kind) {
        case ShiftMode::Kind::Zero:
            break;
        case ShiftMode::Kind::Fixed:
            if (shift_mode.fixed.size() != dim)
                throw DimensionMismatch("make_spec: fixed shift dimension mismatch");
            spec.shift = shift_mode.fixed;
            break;
        case ShiftMode::Kind::SeededUniform: {
            Rng rng(seed);
            spec.shift = rng.uniform_vec(dim, shift_mode.lo, shift_mode.hi);
            break;
        }
    }
    return spec;
}

std::vector<double> CountingEvaluator::batch_evaluate(const std::vector<Vec>& xs) {
    const long batch = static_cast<long>(xs.size());
    if (evals_used_ + batch > spec_.budget)
        throw BudgetExhausted("batch_evaluate: evaluation budget exhausted");
    std::vector<double> values;
    values.reserve(xs.size());
    for (const Vec& x : xs) values.push_back(evaluate(spec_, x));
    evals_used_ += batch;
    return values;
}

}  // namespace syncma
