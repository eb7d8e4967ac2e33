#include "syncma/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

#include "syncma/cmaes.hpp"
#include "syncma/fitness.hpp"

namespace syncma {

namespace {

using json = nlohmann::ordered_json;

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// Trim a %g rendering for run names: 2 -> "2", 0.5 -> "0.5".
std::string short_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

}  // namespace

std::string optimizer_name(OptimizerKind kind) {
    switch (kind) {
        case OptimizerKind::SynCma: return "syncma";
        case OptimizerKind::CmaEs: return "cmaes";
        case OptimizerKind::RandomSearch: return "rs";
    }
    throw ConfigError("optimizer_name: unknown optimizer");
}

OptimizerKind optimizer_from_name(const std::string& name) {
    if (name == "syncma") return OptimizerKind::SynCma;
    if (name == "cmaes") return OptimizerKind::CmaEs;
    if (name == "rs") return OptimizerKind::RandomSearch;
    throw ConfigError("unknown optimizer: " + name);
}

SynCmaConfig RunConfig::syncma_config() const {
    SynCmaConfig c;
    c.lambda0 = lambda0;
    c.z_m = z_m;
    c.eta_c_mode = eta_c_mode;
    c.sigma0 = sigma0;
    c.population = resolved_population();
    return c;
}

std::string RunConfig::run_name() const {
    std::string name = objective_name(function) + "-" + std::to_string(dim) + "d-" +
                       optimizer_name(optimizer);
    if (optimizer == OptimizerKind::SynCma) name += "-l" + short_double(lambda0);
    return name;
}

double TrialTrace::final_best() const {
    return best_value.empty() ? kInf : best_value.back();
}

bool SummaryStats::has_median_hit() const { return std::isfinite(median_hit_evals); }

std::vector<Vec> random_search_step(double lo, double hi, int dim, Rng& rng, int count) {
    std::vector<Vec> xs;
    xs.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) xs.push_back(rng.uniform_vec(dim, lo, hi));
    return xs;
}

TrialTrace run_trial(const RunConfig& config, int trial_index) {
    const int N = config.resolved_population();
    Rng rng(config.seed + static_cast<std::uint64_t>(trial_index));

    Vec m0;
    switch (config.m0_mode.kind) {
        case M0Mode::Kind::Fixed:
            if (config.m0_mode.fixed.size() != config.dim)
                throw DimensionMismatch("run_trial: fixed m0 dimension mismatch");
            m0 = config.m0_mode.fixed;
            break;
        case M0Mode::Kind::SeededUniform:
            m0 = rng.uniform_vec(config.dim, config.m0_mode.lo, config.m0_mode.hi);
            break;
    }

    const ObjectiveSpec spec = make_spec(config.function, config.dim, config.shift_mode,
                                         config.budget, derived_seed(config.seed, 0x5f1f7));
    CountingEvaluator evaluator(spec);

    std::optional<SynCma> syn;
    std::optional<CmaEs> cma;
    WeightScheme scheme;
    switch (config.optimizer) {
        case OptimizerKind::SynCma:
            syn.emplace(m0, config.syncma_config());
            scheme = syn->config().weight_scheme;
            break;
        case OptimizerKind::CmaEs:
            cma.emplace(m0, config.sigma0, N);
            scheme = cma->weight_scheme();
            break;
        case OptimizerKind::RandomSearch:
            break;
    }

    TrialTrace trace;
    trace.trial = trial_index;
    double best = kInf;
    while (true) {
        std::vector<Vec> samples;
        Vec mean_at_sampling;
        if (syn) {
            mean_at_sampling = syn->mean();
            samples = syn->ask(rng);
        } else if (cma) {
            mean_at_sampling = cma->mean();
            samples = cma->ask(rng);
        } else {
            samples = random_search_step(config.rs_lo, config.rs_hi, config.dim, rng, N);
        }

        std::vector<double> values;
        try {
            values = evaluator.batch_evaluate(samples);
        } catch (const BudgetExhausted&) {
            break;
        }
        for (double v : values) best = std::min(best, v);
        trace.evaluations.push_back(evaluator.evals_used());
        trace.best_value.push_back(best);

        if (syn || cma) {
            GenerationRecord gen{std::move(samples), values, assign(values, scheme),
                                 std::move(mean_at_sampling)};
            try {
                if (syn) {
                    syn->tell(gen);
                } else {
                    cma->tell(gen);
                }
            } catch (const CovarianceDegenerate& e) {
                trace.failed = true;
                trace.failure = e.what();
                break;
            }
        }
    }
    return trace;
}

std::vector<TrialTrace> run_all_trials(const RunConfig& config) {
    if (config.trials < 1) throw ConfigError("run_all_trials: trials must be >= 1");
    std::vector<TrialTrace> traces;
    traces.reserve(static_cast<std::size_t>(config.trials));
    for (int i = 0; i < config.trials; ++i) traces.push_back(run_trial(config, i));
    return traces;
}

std::optional<long> first_hitting_time(const TrialTrace& trace, double threshold) {
    for (std::size_t i = 0; i < trace.best_value.size(); ++i) {
        if (trace.best_value[i] < threshold) return trace.evaluations[i];
    }
    return std::nullopt;
}

double quantile(std::vector<double> v, double p) {
    if (v.empty()) throw ConfigError("quantile: empty input");
    std::sort(v.begin(), v.end());
    const double h = p * (static_cast<double>(v.size()) - 1.0);
    const auto lo = static_cast<std::size_t>(h);
    if (lo + 1 >= v.size() || v[lo] == v[lo + 1]) return v[lo];
    const double frac = h - static_cast<double>(lo);
    if (frac == 0.0) return v[lo];
    if (std::isinf(v[lo + 1])) return v[lo + 1];
    return v[lo] + frac * (v[lo + 1] - v[lo]);
}

SummaryStats summarize(const std::vector<TrialTrace>& traces, double threshold) {
    if (traces.empty()) throw ConfigError("summarize: no traces");
    std::vector<double> finals;
    SummaryStats stats;
    for (const TrialTrace& t : traces) {
        finals.push_back(t.final_best());
        const auto hit = first_hitting_time(t, threshold);
        stats.hit_evals.push_back(hit ? static_cast<double>(*hit) : kInf);
    }
    stats.median_best = quantile(finals, 0.5);
    stats.q25 = quantile(finals, 0.25);
    stats.q75 = quantile(finals, 0.75);
    stats.median_hit_evals = quantile(stats.hit_evals, 0.5);
    return stats;
}

void write_csv(const std::vector<TrialTrace>& traces, std::ostream& out) {
    out << "trial,evaluations,best_value\n";
    for (const TrialTrace& t : traces) {
        for (std::size_t i = 0; i < t.evaluations.size(); ++i) {
            out << t.trial << ',' << t.evaluations[i] << ',' << format_double(t.best_value[i])
                << '\n';
        }
    }
}

void write_summary(const RunConfig& config, const SummaryStats& stats, std::ostream& out) {
    json doc;
    doc["function"] = objective_name(config.function);
    doc["dim"] = config.dim;
    doc["optimizer"] = optimizer_name(config.optimizer);
    doc["lambda0"] = config.lambda0;
    doc["median_best"] = stats.median_best;
    doc["q25"] = stats.q25;
    doc["q75"] = stats.q75;
    if (stats.has_median_hit()) {
        doc["median_hit_evals"] = stats.median_hit_evals;
    } else {
        doc["median_hit_evals"] = nullptr;
    }
    doc["trials"] = config.trials;
    doc["budget"] = config.budget;
    out << doc.dump(2) << '\n';
}

std::filesystem::path run_and_write(const RunConfig& config) {
    const auto traces = run_all_trials(config);
    const auto stats = summarize(traces, config.threshold);
    const std::filesystem::path dir = std::filesystem::path(config.output_dir) / config.run_name();
    std::filesystem::create_directories(dir);
    {
        std::ofstream out(dir / "traces.csv", std::ios::binary);
        write_csv(traces, out);
    }
    {
        std::ofstream out(dir / "summary.json", std::ios::binary);
        write_summary(config, stats, out);
    }
    return dir;
}

namespace {

void require_known_keys(const json& obj, std::initializer_list<const char*> allowed,
                        const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        if (std::find_if(allowed.begin(), allowed.end(),
                         [&](const char* k) { return key == k; }) == allowed.end()) {
            throw ConfigError("unknown key '" + key + "' in " + where);
        }
    }
}

Vec parse_vec(const json& arr, const std::string& where) {
    if (!arr.is_array()) throw ConfigError(where + ": expected an array of numbers");
    Vec v(arr.size());
    Eigen::Index i = 0;
    for (const auto& x : arr) v[i++] = x.get<double>();
    return v;
}

EtaCMode parse_eta_c_mode(const json& obj) {
    require_known_keys(obj, {"kind", "value", "factor"}, "eta_c_mode");
    const std::string kind = obj.at("kind").get<std::string>();
    if (kind == "absolute") return EtaCMode::absolute(obj.at("value").get<double>());
    if (kind == "cma-scaled")
        return EtaCMode::cma_scaled(obj.contains("factor") ? obj.at("factor").get<double>() : 2.0);
    throw ConfigError("eta_c_mode.kind must be 'absolute' or 'cma-scaled'");
}

M0Mode parse_m0_mode(const json& obj) {
    require_known_keys(obj, {"kind", "value", "lo", "hi"}, "m0_mode");
    const std::string kind = obj.at("kind").get<std::string>();
    if (kind == "fixed") return M0Mode::fixed_at(parse_vec(obj.at("value"), "m0_mode.value"));
    if (kind == "seeded-uniform")
        return M0Mode::seeded_uniform(obj.at("lo").get<double>(), obj.at("hi").get<double>());
    throw ConfigError("m0_mode.kind must be 'fixed' or 'seeded-uniform'");
}

ShiftMode parse_shift_mode(const json& obj) {
    require_known_keys(obj, {"kind", "value", "lo", "hi"}, "shift_mode");
    const std::string kind = obj.at("kind").get<std::string>();
    if (kind == "zero") return ShiftMode::zero();
    if (kind == "fixed") return ShiftMode::fixed_at(parse_vec(obj.at("value"), "shift_mode.value"));
    if (kind == "seeded-uniform")
        return ShiftMode::seeded_uniform(obj.at("lo").get<double>(), obj.at("hi").get<double>());
    throw ConfigError("shift_mode.kind must be 'zero', 'fixed' or 'seeded-uniform'");
}

}  // namespace

RunConfig parse_config_json(const std::string& text) {
    json doc = json::parse(text);
    if (!doc.is_object()) throw ConfigError("config: expected a top-level mapping");
    require_known_keys(doc,
                       {"function", "dim", "optimizer", "lambda0", "z_m", "eta_c_mode", "sigma0",
                        "population", "budget", "trials", "seed", "m0_mode", "threshold",
                        "shift_mode", "output_dir"},
                       "config");
    RunConfig config;
    config.function = objective_from_name(doc.at("function").get<std::string>());
    config.dim = doc.at("dim").get<int>();
    config.optimizer = optimizer_from_name(doc.at("optimizer").get<std::string>());
    if (doc.contains("lambda0")) config.lambda0 = doc["lambda0"].get<double>();
    if (doc.contains("z_m")) config.z_m = doc["z_m"].get<double>();
    if (doc.contains("eta_c_mode")) config.eta_c_mode = parse_eta_c_mode(doc["eta_c_mode"]);
    if (doc.contains("sigma0")) config.sigma0 = doc["sigma0"].get<double>();
    if (doc.contains("population")) config.population = doc["population"].get<int>();
    if (doc.contains("budget")) config.budget = doc["budget"].get<long>();
    if (doc.contains("trials")) config.trials = doc["trials"].get<int>();
    if (doc.contains("seed")) config.seed = doc["seed"].get<std::uint64_t>();
    if (doc.contains("m0_mode")) config.m0_mode = parse_m0_mode(doc["m0_mode"]);
    if (doc.contains("threshold")) config.threshold = doc["threshold"].get<double>();
    if (doc.contains("shift_mode")) config.shift_mode = parse_shift_mode(doc["shift_mode"]);
    if (doc.contains("output_dir")) config.output_dir = doc["output_dir"].get<std::string>();
    return config;
}

RunConfig load_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config_json(buf.str());
}

}  // namespace syncma
