#include "harmonium/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "harmonium/text.hpp"
#include "json.hpp"

namespace harmonium {

namespace {

using nlohmann::json;

constexpr const char* kOutputDirEnvVar = "HARMONIUM_OUT";

[[noreturn]] void config_error(const std::string& message) {
    throw std::invalid_argument("config: " + message);
}

void require_no_extra_keys(const json& object, const std::string& where,
                           std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : object.items()) {
        if (std::find_if(allowed.begin(), allowed.end(),
                         [&](const char* k) { return key == k; }) == allowed.end())
            config_error("unknown key '" + key + "' in " + where);
    }
}

double get_number(const json& object, const std::string& where, const char* key,
                  double fallback) {
    if (!object.contains(key)) return fallback;
    if (!object[key].is_number()) config_error(where + "." + key + " must be a number");
    return object[key].get<double>();
}

std::int64_t get_integer(const json& object, const std::string& where, const char* key,
                         std::int64_t fallback) {
    if (!object.contains(key)) return fallback;
    if (!object[key].is_number_integer()) config_error(where + "." + key + " must be an integer");
    return object[key].get<std::int64_t>();
}

std::vector<double> get_number_array(const json& object, const std::string& where,
                                     const char* key) {
    if (!object.contains(key)) return {};
    if (!object[key].is_array()) config_error(where + "." + key + " must be an array of numbers");
    std::vector<double> out;
    for (const auto& element : object[key]) {
        if (!element.is_number()) config_error(where + "." + key + " must be an array of numbers");
        out.push_back(element.get<double>());
    }
    return out;
}

// The run length is budget-derived, so a length key inside params would be a
// second, conflicting control; reject it outright.
void reject_length_keys(const json& params, const std::string& where) {
    for (const char* key : {"max_iterations", "max_generations"}) {
        if (params.contains(key))
            config_error(where + " must not set " + key + "; the budget controls run length");
    }
}

AlgorithmParams parse_params(Algorithm algorithm, const json& params) {
    if (!params.is_object()) config_error("params must be an object");
    reject_length_keys(params, "params");
    switch (algorithm) {
        case Algorithm::hs: {
            require_no_extra_keys(params, "params", {"hms", "r_accept", "r_pa", "b_range"});
            HsParams p;
            p.hms = static_cast<int>(get_integer(params, "params", "hms", p.hms));
            p.r_accept = get_number(params, "params", "r_accept", p.r_accept);
            p.r_pa = get_number(params, "params", "r_pa", p.r_pa);
            p.b_range = get_number_array(params, "params", "b_range");
            return p;
        }
        case Algorithm::sa: {
            require_no_extra_keys(params, "params", {"t0", "alpha", "k", "step_size"});
            SaParams p;
            p.t0 = get_number(params, "params", "t0", p.t0);
            p.alpha = get_number(params, "params", "alpha", p.alpha);
            p.k = get_number(params, "params", "k", p.k);
            p.step_size = get_number_array(params, "params", "step_size");
            return p;
        }
        case Algorithm::ga: {
            require_no_extra_keys(params, "params",
                                  {"pop_size", "p_c", "p_m", "mutation_scale", "elite_count"});
            GaParams p;
            p.pop_size = static_cast<int>(get_integer(params, "params", "pop_size", p.pop_size));
            p.p_c = get_number(params, "params", "p_c", p.p_c);
            p.p_m = get_number(params, "params", "p_m", p.p_m);
            p.mutation_scale = get_number_array(params, "params", "mutation_scale");
            p.elite_count =
                static_cast<int>(get_integer(params, "params", "elite_count", p.elite_count));
            return p;
        }
        case Algorithm::pso: {
            require_no_extra_keys(params, "params", {"swarm_size", "alpha", "beta"});
            PsoParams p;
            p.swarm_size =
                static_cast<int>(get_integer(params, "params", "swarm_size", p.swarm_size));
            p.alpha = get_number(params, "params", "alpha", p.alpha);
            p.beta = get_number(params, "params", "beta", p.beta);
            return p;
        }
        case Algorithm::fa: {
            require_no_extra_keys(params, "params", {"pop_size", "alpha", "beta", "gamma"});
            FaParams p;
            p.pop_size = static_cast<int>(get_integer(params, "params", "pop_size", p.pop_size));
            p.alpha = get_number(params, "params", "alpha", p.alpha);
            p.beta = get_number(params, "params", "beta", p.beta);
            p.gamma = get_number(params, "params", "gamma", p.gamma);
            return p;
        }
    }
    config_error("unhandled algorithm");
}

json params_to_json(const AlgorithmParams& params) {
    json out = json::object();
    std::visit(
        [&](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, HsParams>) {
                out["hms"] = p.hms;
                out["r_accept"] = p.r_accept;
                out["r_pa"] = p.r_pa;
                if (!p.b_range.empty()) out["b_range"] = p.b_range;
            } else if constexpr (std::is_same_v<T, SaParams>) {
                out["t0"] = p.t0;
                out["alpha"] = p.alpha;
                out["k"] = p.k;
                if (!p.step_size.empty()) out["step_size"] = p.step_size;
            } else if constexpr (std::is_same_v<T, GaParams>) {
                out["pop_size"] = p.pop_size;
                out["p_c"] = p.p_c;
                out["p_m"] = p.p_m;
                if (!p.mutation_scale.empty()) out["mutation_scale"] = p.mutation_scale;
                out["elite_count"] = p.elite_count;
            } else if constexpr (std::is_same_v<T, PsoParams>) {
                out["swarm_size"] = p.swarm_size;
                out["alpha"] = p.alpha;
                out["beta"] = p.beta;
            } else if constexpr (std::is_same_v<T, FaParams>) {
                out["pop_size"] = p.pop_size;
                out["alpha"] = p.alpha;
                out["beta"] = p.beta;
                out["gamma"] = p.gamma;
            }
        },
        params);
    return out;
}

Algorithm algorithm_of(const AlgorithmParams& params) {
    switch (params.index()) {
        case 0: return Algorithm::hs;
        case 1: return Algorithm::sa;
        case 2: return Algorithm::ga;
        case 3: return Algorithm::pso;
        case 4: return Algorithm::fa;
        default: throw std::logic_error("valueless params variant");
    }
}

// Applies the budget to a parameter set: fills array defaults from bounds and
// derives the run length so total evaluations never exceed the ceiling.
AlgorithmParams materialize_params(const RunConfig& config, const Bounds& bounds) {
    const std::int64_t amount = config.budget.amount;
    if (amount < 0) config_error("budget.amount must be nonnegative");
    if (config.budget.unit == Budget::Unit::iterations && config.algorithm != Algorithm::hs)
        config_error("an iterations budget is only defined for hs; use evaluations");

    AlgorithmParams out = config.params;
    std::visit(
        [&](auto& p) {
            using T = std::decay_t<decltype(p)>;
            // Validate the tuning knobs at zero length first so budget
            // arithmetic below can trust them.
            if constexpr (std::is_same_v<T, HsParams>) {
                p = resolve_hs_defaults(std::move(p), bounds);
                p.validate(bounds.dims());
                if (config.budget.unit == Budget::Unit::iterations) {
                    p.max_iterations = amount;
                } else {
                    if (amount < p.hms)
                        config_error("budget must cover memory initialization (hms evaluations)");
                    p.max_iterations = amount - p.hms;
                }
            } else if constexpr (std::is_same_v<T, SaParams>) {
                p = resolve_sa_defaults(std::move(p), bounds);
                p.validate(bounds.dims());
                if (amount < 1) config_error("budget must cover the initial evaluation");
                p.max_iterations = amount - 1;
            } else if constexpr (std::is_same_v<T, GaParams>) {
                p = resolve_ga_defaults(std::move(p), bounds);
                p.validate(bounds.dims());
                if (amount < p.pop_size)
                    config_error("budget must cover the initial population");
                p.max_generations = (amount - p.pop_size) / (p.pop_size - p.elite_count);
            } else if constexpr (std::is_same_v<T, PsoParams>) {
                p.validate();
                if (amount < p.swarm_size)
                    config_error("budget must cover the initial swarm");
                p.max_iterations = amount / p.swarm_size - 1;
            } else if constexpr (std::is_same_v<T, FaParams>) {
                p.validate();
                if (amount < p.pop_size)
                    config_error("budget must cover the initial population");
                p.max_iterations = amount / p.pop_size - 1;
            }
        },
        out);
    return out;
}

RunOutput dispatch_run(const ObjectiveFunction& objective, const AlgorithmParams& params,
                       std::uint64_t seed) {
    return std::visit(
        [&](const auto& p) -> RunOutput {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, HsParams>) return run_hs(objective, p, seed);
            else if constexpr (std::is_same_v<T, SaParams>) return run_sa(objective, p, seed);
            else if constexpr (std::is_same_v<T, GaParams>) return run_ga(objective, p, seed);
            else if constexpr (std::is_same_v<T, PsoParams>) return run_pso(objective, p, seed);
            else return run_fa(objective, p, seed);
        },
        params);
}

double median_of_sorted(const std::vector<double>& sorted) {
    const std::size_t n = sorted.size();
    if (n % 2 == 1) return sorted[n / 2];
    return 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

json summary_to_json(const SummaryStats& stats) {
    json out = json::object();
    out["n_runs"] = stats.n_runs;
    out["best_min"] = stats.best_min;
    out["best_median"] = stats.best_median;
    out["best_mean"] = stats.best_mean;
    out["best_max"] = stats.best_max;
    out["best_stddev"] = stats.best_stddev;
    if (stats.success_rate) out["success_rate"] = *stats.success_rate;
    else out["success_rate"] = nullptr;
    if (!stats.median_evals_to_threshold) out["median_evals_to_threshold"] = nullptr;
    else if (std::isinf(*stats.median_evals_to_threshold))
        out["median_evals_to_threshold"] = "inf";
    else out["median_evals_to_threshold"] = *stats.median_evals_to_threshold;
    return out;
}

}  // namespace

std::string to_string(Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::hs: return "hs";
        case Algorithm::sa: return "sa";
        case Algorithm::ga: return "ga";
        case Algorithm::pso: return "pso";
        case Algorithm::fa: return "fa";
    }
    throw std::logic_error("bad Algorithm value");
}

Algorithm algorithm_from_string(const std::string& name) {
    if (name == "hs") return Algorithm::hs;
    if (name == "sa") return Algorithm::sa;
    if (name == "ga") return Algorithm::ga;
    if (name == "pso") return Algorithm::pso;
    if (name == "fa") return Algorithm::fa;
    throw std::invalid_argument("unknown algorithm '" + name + "'");
}

RunConfig parse_run_config(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        config_error(std::string("not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) config_error("top level must be an object");
    require_no_extra_keys(doc, "config",
                          {"algorithm", "benchmark", "params", "seeds", "budget", "output_dir",
                           "trace_detail", "trace_format", "success_threshold"});

    RunConfig config;

    if (!doc.contains("algorithm") || !doc["algorithm"].is_string())
        config_error("algorithm must be a string");
    config.algorithm = algorithm_from_string(doc["algorithm"].get<std::string>());

    if (!doc.contains("benchmark") || !doc["benchmark"].is_string())
        config_error("benchmark must be a string");
    config.benchmark = doc["benchmark"].get<std::string>();
    if (config.benchmark.empty()) config_error("benchmark must not be empty");

    config.params = parse_params(config.algorithm,
                                 doc.contains("params") ? doc["params"] : json::object());

    if (!doc.contains("seeds") || !doc["seeds"].is_array() || doc["seeds"].empty())
        config_error("seeds must be a non-empty array of integers");
    for (const auto& element : doc["seeds"]) {
        if (!element.is_number_integer()) config_error("seeds must all be integers");
        if (!element.is_number_unsigned() && element.get<std::int64_t>() < 0)
            config_error("seeds must be nonnegative");
        config.seeds.push_back(element.get<std::uint64_t>());
    }

    if (!doc.contains("budget") || !doc["budget"].is_object())
        config_error("budget must be an object with unit and amount");
    const json& budget = doc["budget"];
    require_no_extra_keys(budget, "budget", {"unit", "amount"});
    const std::string unit =
        budget.contains("unit") && budget["unit"].is_string() ? budget["unit"].get<std::string>()
                                                              : std::string();
    if (unit == "evaluations") config.budget.unit = Budget::Unit::evaluations;
    else if (unit == "iterations") config.budget.unit = Budget::Unit::iterations;
    else config_error("budget.unit must be \"evaluations\" or \"iterations\"");
    config.budget.amount = get_integer(budget, "budget", "amount", -1);
    if (config.budget.amount < 0) config_error("budget.amount must be a nonnegative integer");

    if (doc.contains("output_dir")) {
        if (!doc["output_dir"].is_string()) config_error("output_dir must be a string");
        config.output_dir = doc["output_dir"].get<std::string>();
    }

    if (doc.contains("trace_detail")) {
        const std::string detail =
            doc["trace_detail"].is_string() ? doc["trace_detail"].get<std::string>() : "";
        if (detail == "summary") config.trace_detail = TraceDetail::summary;
        else if (detail == "full") config.trace_detail = TraceDetail::full;
        else config_error("trace_detail must be \"summary\" or \"full\"");
    }

    if (doc.contains("trace_format")) {
        const std::string format =
            doc["trace_format"].is_string() ? doc["trace_format"].get<std::string>() : "";
        if (format == "csv") config.trace_format = TraceFormat::csv;
        else if (format == "jsonl") config.trace_format = TraceFormat::jsonl;
        else config_error("trace_format must be \"csv\" or \"jsonl\"");
    }

    if (doc.contains("success_threshold")) {
        if (!doc["success_threshold"].is_number())
            config_error("success_threshold must be a number");
        const double threshold = doc["success_threshold"].get<double>();
        if (!std::isfinite(threshold)) config_error("success_threshold must be finite");
        config.success_threshold = threshold;
    }

    return config;
}

RunConfig load_run_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open config file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_run_config(buffer.str());
}

std::string serialize_run_config(const RunConfig& config) {
    json doc = json::object();
    doc["algorithm"] = to_string(config.algorithm);
    doc["benchmark"] = config.benchmark;
    doc["params"] = params_to_json(config.params);
    doc["seeds"] = config.seeds;
    doc["budget"] = {
        {"unit", config.budget.unit == Budget::Unit::evaluations ? "evaluations" : "iterations"},
        {"amount", config.budget.amount},
    };
    if (!config.output_dir.empty()) doc["output_dir"] = config.output_dir;
    doc["trace_detail"] = config.trace_detail == TraceDetail::summary ? "summary" : "full";
    doc["trace_format"] = config.trace_format == TraceFormat::csv ? "csv" : "jsonl";
    if (config.success_threshold) doc["success_threshold"] = *config.success_threshold;
    return doc.dump(2) + "\n";
}

std::int64_t budget_eval_ceiling(const RunConfig& config) {
    if (config.budget.unit == Budget::Unit::evaluations) return config.budget.amount;
    if (config.algorithm != Algorithm::hs || !std::holds_alternative<HsParams>(config.params))
        config_error("an iterations budget is only defined for hs; use evaluations");
    return std::get<HsParams>(config.params).hms + config.budget.amount;
}

SummaryStats summarize(const std::vector<RunOutcome>& outcomes,
                       const std::vector<Trace>& traces,
                       std::optional<double> success_threshold) {
    SummaryStats stats;

    std::vector<double> bests;
    for (const auto& outcome : outcomes)
        if (!outcome.failed) bests.push_back(outcome.result.best.value);
    stats.n_runs = static_cast<std::int64_t>(bests.size());
    if (bests.empty()) return stats;

    std::sort(bests.begin(), bests.end());
    stats.best_min = bests.front();
    stats.best_max = bests.back();
    stats.best_median = median_of_sorted(bests);
    double sum = 0.0;
    for (const double v : bests) sum += v;
    stats.best_mean = sum / static_cast<double>(bests.size());
    if (bests.size() >= 2) {
        double sq = 0.0;
        for (const double v : bests) sq += (v - stats.best_mean) * (v - stats.best_mean);
        stats.best_stddev = std::sqrt(sq / static_cast<double>(bests.size() - 1));
    }

    if (success_threshold) {
        std::int64_t successes = 0;
        std::vector<double> evals_to_threshold;
        for (std::size_t i = 0; i < outcomes.size(); ++i) {
            if (outcomes[i].failed) continue;
            if (outcomes[i].result.best.value <= *success_threshold) ++successes;

            double reached = std::numeric_limits<double>::infinity();
            if (i < traces.size()) {
                for (const auto& record : traces[i]) {
                    if (record.best_value <= *success_threshold) {
                        reached = static_cast<double>(record.eval_count);
                        break;
                    }
                }
            }
            evals_to_threshold.push_back(reached);
        }
        stats.success_rate = static_cast<double>(successes) / static_cast<double>(stats.n_runs);
        std::sort(evals_to_threshold.begin(), evals_to_threshold.end());
        stats.median_evals_to_threshold = median_of_sorted(evals_to_threshold);
    }

    return stats;
}

std::string render_trace(const Trace& trace, TraceFormat format, std::size_t dims) {
    for (const auto& record : trace) {
        if (record.best_point.size() != dims || record.candidate_point.size() != dims)
            throw std::invalid_argument("render_trace: record dimension mismatch");
    }

    std::string out;
    if (format == TraceFormat::csv) {
        std::vector<std::string> header = {"iteration", "eval_count", "best_value"};
        for (std::size_t i = 0; i < dims; ++i) header.push_back("best_point_" + format_int(i));
        for (std::size_t i = 0; i < dims; ++i)
            header.push_back("candidate_point_" + format_int(i));
        header.push_back("accepted");
        out += join_csv(header) + "\n";

        for (const auto& record : trace) {
            std::vector<std::string> row = {format_int(record.iteration),
                                            format_int(record.eval_count),
                                            format_double(record.best_value)};
            for (const double v : record.best_point) row.push_back(format_double(v));
            for (const double v : record.candidate_point) row.push_back(format_double(v));
            row.push_back(record.accepted ? "true" : "false");
            out += join_csv(row) + "\n";
        }
        return out;
    }

    for (const auto& record : trace) {
        out += "{\"iteration\":" + format_int(record.iteration) +
               ",\"eval_count\":" + format_int(record.eval_count) +
               ",\"best_value\":" + format_double(record.best_value) + ",\"best_point\":[";
        for (std::size_t i = 0; i < dims; ++i) {
            if (i != 0) out += ',';
            out += format_double(record.best_point[i]);
        }
        out += "],\"candidate_point\":[";
        for (std::size_t i = 0; i < dims; ++i) {
            if (i != 0) out += ',';
            out += format_double(record.candidate_point[i]);
        }
        out += std::string("],\"accepted\":") + (record.accepted ? "true" : "false") + "}\n";
    }
    return out;
}

void export_trace(const Trace& trace, const std::filesystem::path& path, TraceFormat format,
                  std::size_t dims) {
    write_text_file(path, render_trace(trace, format, dims));
}

ExperimentOutput run_experiment(const RunConfig& config, const BenchmarkRegistry& registry) {
    if (config.seeds.empty()) config_error("seeds must be non-empty");
    if (algorithm_of(config.params) != config.algorithm)
        config_error("params do not match algorithm '" + to_string(config.algorithm) + "'");
    if (!registry.contains(config.benchmark))
        config_error("unknown benchmark '" + config.benchmark + "'");
    if (config.success_threshold && !std::isfinite(*config.success_threshold))
        config_error("success_threshold must be finite");

    const BenchmarkSpec& benchmark = registry.get(config.benchmark);
    const ObjectiveFunction objective = benchmark.objective();
    const AlgorithmParams params = materialize_params(config, benchmark.bounds);
    const std::int64_t ceiling = budget_eval_ceiling(config);

    ExperimentOutput out;
    out.outcomes.reserve(config.seeds.size());
    out.traces.reserve(config.seeds.size());
    for (const std::uint64_t seed : config.seeds) {
        RunOutcome outcome;
        outcome.seed = seed;
        try {
            RunOutput run = dispatch_run(objective, params, seed);
            if (run.result.eval_count > ceiling)
                throw std::logic_error("run exceeded its evaluation budget");
            outcome.result = std::move(run.result);
            out.traces.push_back(std::move(run.trace));
        } catch (const std::exception& e) {
            outcome.failed = true;
            outcome.error = e.what();
            out.traces.emplace_back();
        }
        out.outcomes.push_back(std::move(outcome));
    }

    out.summary = summarize(out.outcomes, out.traces, config.success_threshold);

    if (!config.output_dir.empty()) {
        const std::filesystem::path dir(config.output_dir);
        std::filesystem::create_directories(dir);

        if (config.trace_detail == TraceDetail::full) {
            const char* extension = config.trace_format == TraceFormat::csv ? ".csv" : ".jsonl";
            for (std::size_t i = 0; i < out.outcomes.size(); ++i) {
                if (out.outcomes[i].failed) continue;
                const std::filesystem::path trace_path =
                    dir / ("trace_seed" + std::to_string(out.outcomes[i].seed) + extension);
                export_trace(out.traces[i], trace_path, config.trace_format, benchmark.dims);
                out.files_written.push_back(trace_path);
            }
        }

        json results = json::array();
        for (const auto& outcome : out.outcomes) {
            json entry = json::object();
            entry["seed"] = outcome.seed;
            entry["failed"] = outcome.failed;
            if (outcome.failed) {
                entry["error"] = outcome.error;
            } else {
                entry["best_value"] = outcome.result.best.value;
                entry["best_point"] = outcome.result.best.point;
                entry["eval_count"] = outcome.result.eval_count;
                entry["wall_time_ms"] = outcome.result.wall_time_ms;
                entry["params"] = json::parse(outcome.result.params_echo);
            }
            results.push_back(std::move(entry));
        }
        const std::filesystem::path results_path = dir / "results.json";
        write_text_file(results_path, results.dump(2) + "\n");
        out.files_written.push_back(results_path);

        json summary = summary_to_json(out.summary);
        summary["algorithm"] = to_string(config.algorithm);
        summary["benchmark"] = config.benchmark;
        summary["budget_evals"] = ceiling;
        const std::filesystem::path summary_path = dir / "summary.json";
        write_text_file(summary_path, summary.dump(2) + "\n");
        out.files_written.push_back(summary_path);
    }

    return out;
}

Comparison compare_algorithms(const std::vector<RunConfig>& configs,
                              const BenchmarkRegistry& registry) {
    if (configs.empty()) config_error("compare needs at least one config");

    Comparison comparison;
    comparison.benchmark = configs.front().benchmark;
    comparison.budget_evals = budget_eval_ceiling(configs.front());
    for (const auto& config : configs) {
        if (config.benchmark != comparison.benchmark)
            config_error("compare: configs must share one benchmark (got '" + config.benchmark +
                         "' and '" + comparison.benchmark + "')");
        if (budget_eval_ceiling(config) != comparison.budget_evals)
            config_error("compare: configs must share one evaluation budget");
    }

    for (const auto& config : configs) {
        RunConfig quiet = config;   // comparison is analysis-only; never writes run files
        quiet.output_dir.clear();
        const ExperimentOutput output = run_experiment(quiet, registry);
        comparison.rows.push_back(ComparisonRow{config.algorithm, output.summary});
    }

    std::stable_sort(comparison.rows.begin(), comparison.rows.end(),
                     [](const ComparisonRow& a, const ComparisonRow& b) {
                         return to_string(a.algorithm) < to_string(b.algorithm);
                     });
    return comparison;
}

namespace {

std::vector<std::string> comparison_header() {
    return {"algorithm", "n_runs",      "best_min",     "best_median",
            "best_mean", "best_max",    "best_stddev",  "success_rate",
            "median_evals_to_threshold"};
}

std::vector<std::string> comparison_row_fields(const ComparisonRow& row) {
    const SummaryStats& s = row.stats;
    std::vector<std::string> fields = {to_string(row.algorithm), format_int(s.n_runs),
                                       format_double(s.best_min), format_double(s.best_median),
                                       format_double(s.best_mean), format_double(s.best_max),
                                       format_double(s.best_stddev)};
    fields.push_back(s.success_rate ? format_double(*s.success_rate) : "");
    fields.push_back(s.median_evals_to_threshold ? format_double(*s.median_evals_to_threshold)
                                                 : "");
    return fields;
}

}  // namespace

std::string comparison_to_csv(const Comparison& comparison) {
    std::string out = join_csv(comparison_header()) + "\n";
    for (const auto& row : comparison.rows) out += join_csv(comparison_row_fields(row)) + "\n";
    return out;
}

std::string comparison_to_text(const Comparison& comparison) {
    std::vector<std::vector<std::string>> table;
    table.push_back(comparison_header());
    for (const auto& row : comparison.rows) table.push_back(comparison_row_fields(row));

    std::vector<std::size_t> widths(table.front().size(), 0);
    for (const auto& row : table)
        for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());

    std::string out = "benchmark: " + comparison.benchmark +
                      "  budget_evals: " + format_int(comparison.budget_evals) + "\n";
    for (const auto& row : table) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out += row[c];
            if (c + 1 < row.size()) out += std::string(widths[c] - row[c].size() + 2, ' ');
        }
        out += "\n";
    }
    return out;
}

std::string resolve_output_dir(const std::string& cli_out, const std::string& config_out) {
    if (!cli_out.empty()) return cli_out;
    if (!config_out.empty()) return config_out;
    if (const char* env = std::getenv(kOutputDirEnvVar); env && *env) return env;
    return ".";
}

}  // namespace harmonium
