#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "syncma/objectives.hpp"
#include "syncma/syncma.hpp"

namespace syncma {

enum class OptimizerKind { SynCma, CmaEs, RandomSearch };

std::string optimizer_name(OptimizerKind kind);
OptimizerKind optimizer_from_name(const std::string& name);

/// How each trial's initial mean is chosen.
struct M0Mode {
    enum class Kind { Fixed, SeededUniform } kind = Kind::SeededUniform;
    Vec fixed;
    double lo = -3.0, hi = 3.0;

    static M0Mode fixed_at(Vec v) { return {Kind::Fixed, std::move(v), 0.0, 0.0}; }
    static M0Mode seeded_uniform(double lo, double hi) { return {Kind::SeededUniform, {}, lo, hi}; }
};

/// One benchmark run: an objective, an optimizer, and the trial protocol.
/// Field set matches the config-file schema one to one.
struct RunConfig {
    Objective function = Objective::Sphere;
    int dim = 32;
    OptimizerKind optimizer = OptimizerKind::SynCma;
    double lambda0 = 2.0;
    double z_m = 10.0;
    EtaCMode eta_c_mode = EtaCMode::cma_scaled();
    double sigma0 = 0.1;
    int population = 0;  // 0 selects 2 * dim
    long budget = 10000;
    int trials = 20;
    std::uint64_t seed = 1;
    M0Mode m0_mode;
    double threshold = 0.5;
    ShiftMode shift_mode;
    std::string output_dir = "results";

    // Random-search sampling box.
    double rs_lo = -5.0, rs_hi = 5.0;

    int resolved_population() const { return population > 0 ? population : 2 * dim; }
    SynCmaConfig syncma_config() const;
    /// e.g. "sphere-32d-syncma-l2"; directory name under output_dir.
    std::string run_name() const;
};

/// Best-so-far curve of one seeded trial, one point per generation.
struct TrialTrace {
    int trial = 0;
    std::vector<long> evaluations;
    std::vector<double> best_value;
    bool failed = false;  // covariance degenerated; trace truncated at that point
    std::string failure;

    double final_best() const;
};

struct SummaryStats {
    double median_best = 0.0;
    double q25 = 0.0;
    double q75 = 0.0;
    std::vector<double> hit_evals;  // per trial, +inf when the threshold is never reached
    double median_hit_evals = 0.0;  // +inf when the median trial never hits

    bool has_median_hit() const;
};

/// Deterministic given (config.seed, trial_index): the trial stream is seeded
/// at seed + trial_index and draws the initial mean (when seeded-uniform)
/// before any sampling.
TrialTrace run_trial(const RunConfig& config, int trial_index);

std::vector<TrialTrace> run_all_trials(const RunConfig& config);

/// Smallest recorded evaluation count with best value strictly below the
/// threshold; nullopt if never reached.
std::optional<long> first_hitting_time(const TrialTrace& trace, double threshold);

/// Final-budget quantiles plus the hitting-time median (type-7 linear
/// interpolation; +inf entries propagate).
SummaryStats summarize(const std::vector<TrialTrace>& traces, double threshold);

/// N box-uniform candidates; the random-search baseline's whole step.
std::vector<Vec> random_search_step(double lo, double hi, int dim, Rng& rng, int count);

void write_csv(const std::vector<TrialTrace>& traces, std::ostream& out);
void write_summary(const RunConfig& config, const SummaryStats& stats, std::ostream& out);

/// Runs every trial and writes output_dir/<run_name>/{traces.csv, summary.json}.
/// Returns the run directory.
std::filesystem::path run_and_write(const RunConfig& config);

/// Parse the JSON config document. Unknown keys anywhere are errors.
RunConfig parse_config_json(const std::string& text);
RunConfig load_config_file(const std::filesystem::path& path);

/// Type-7 quantile with +inf propagation; v need not be sorted.
double quantile(std::vector<double> v, double p);

}  // namespace syncma
