#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "syncma/linalg.hpp"

namespace syncma {

enum class Objective {
    Sphere,
    Discus,
    Schwefel,
    DiffPowers,
    Bohachevsky,
    LevyMontalvo,
    Rastrigin,
    Ackley,
    Schaffer,
    Rosenbrock,
};

/// Lowercase identifier used by the CLI and config files.
std::string objective_name(Objective f);
Objective objective_from_name(const std::string& name);
std::vector<Objective> all_objectives();

/// How the optimum is placed. The canonical forms all have their minimum 0 at
/// y = 0; the shift maps that point to `shift` in search space.
struct ShiftMode {
    enum class Kind { Zero, Fixed, SeededUniform } kind = Kind::Zero;
    Vec fixed;
    double lo = 0.0, hi = 0.0;

    static ShiftMode zero() { return {}; }
    static ShiftMode fixed_at(Vec v) { return {Kind::Fixed, std::move(v), 0.0, 0.0}; }
    static ShiftMode seeded_uniform(double lo, double hi) { return {Kind::SeededUniform, {}, lo, hi}; }
};

struct ObjectiveSpec {
    Objective name;
    int dim = 0;
    Vec shift;
    long budget = 0;
};

/// f(x) for the canonical form evaluated at y = x - shift. Finite, >= 0,
/// zero at x = shift.
double evaluate(const ObjectiveSpec& spec, const Vec& x);

/// Deterministic spec for a given seed (the seed only matters for
/// seeded-uniform shifts).
ObjectiveSpec make_spec(Objective name, int dim, const ShiftMode& shift_mode, long budget,
                        std::uint64_t seed);

/// Budget accounting for hitting-time metrics. Single-owner mutable state;
/// one evaluator per trial.
class CountingEvaluator {
  public:
    explicit CountingEvaluator(ObjectiveSpec spec) : spec_(std::move(spec)) {}

    /// Values aligned to inputs; the counter moves by exactly the batch size.
    /// Throws BudgetExhausted if the batch would overrun the budget.
    std::vector<double> batch_evaluate(const std::vector<Vec>& xs);

    long evals_used() const { return evals_used_; }
    long remaining() const { return spec_.budget - evals_used_; }
    const ObjectiveSpec& spec() const { return spec_; }

  private:
    ObjectiveSpec spec_;
    long evals_used_ = 0;
};

}  // namespace syncma
