#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "harmonium/annealing.hpp"
#include "harmonium/firefly.hpp"
#include "harmonium/genetic.hpp"
#include "harmonium/harmony_search.hpp"
#include "harmonium/objectives.hpp"
#include "harmonium/run.hpp"
#include "harmonium/swarm.hpp"

namespace harmonium {

enum class Algorithm { hs, sa, ga, pso, fa };

std::string to_string(Algorithm algorithm);
Algorithm algorithm_from_string(const std::string& name);

using AlgorithmParams = std::variant<HsParams, SaParams, GaParams, PsoParams, FaParams>;

// Evaluation budget for a run. The canonical unit is objective evaluations so
// population methods and single-agent methods compare fairly; hs configs may
// instead give improvisation iterations, converted as hms + iterations.
struct Budget {
    enum class Unit { evaluations, iterations };
    Unit unit = Unit::evaluations;
    std::int64_t amount = 0;

    bool operator==(const Budget&) const = default;
};

enum class TraceDetail { summary, full };
enum class TraceFormat { csv, jsonl };

// A fully seeded experiment description: one run per seed.
struct RunConfig {
    Algorithm algorithm = Algorithm::hs;
    std::string benchmark;
    AlgorithmParams params = HsParams{};
    std::vector<std::uint64_t> seeds;
    Budget budget;
    std::string output_dir;  // empty: no files are written
    TraceDetail trace_detail = TraceDetail::full;
    TraceFormat trace_format = TraceFormat::csv;
    std::optional<double> success_threshold;  // best value at or below counts as success

    bool operator==(const RunConfig&) const = default;
};

// Parses a JSON config document; unknown keys, unknown algorithms or
// benchmarks, and invalid parameter values are rejected with diagnostics.
RunConfig parse_run_config(const std::string& json_text);
RunConfig load_run_config(const std::filesystem::path& path);

// Inverse of parse_run_config up to formatting; parse(serialize(c)) == c.
std::string serialize_run_config(const RunConfig& config);

// The evaluation ceiling this config's budget implies: the amount itself for
// evaluation budgets, hms + amount for hs iteration budgets.
std::int64_t budget_eval_ceiling(const RunConfig& config);

// Per-seed outcome. A failed run carries the error text; others continue.
struct RunOutcome {
    std::uint64_t seed = 0;
    bool failed = false;
    std::string error;
    RunResult result;  // meaningful when !failed
};

// Aggregate over the completed runs of an experiment.
struct SummaryStats {
    std::int64_t n_runs = 0;  // completed runs only
    double best_min = 0.0;
    double best_median = 0.0;
    double best_mean = 0.0;
    double best_max = 0.0;
    double best_stddev = 0.0;
    std::optional<double> success_rate;               // set when a threshold was given
    std::optional<double> median_evals_to_threshold;  // +inf when most runs never reach it
};

SummaryStats summarize(const std::vector<RunOutcome>& outcomes,
                       const std::vector<Trace>& traces,
                       std::optional<double> success_threshold);

// Renders a trace. CSV columns, exactly:
//   iteration, eval_count, best_value, best_point_0..best_point_{d-1},
//   candidate_point_0..candidate_point_{d-1}, accepted
// with a header row always present (an empty trace renders as the header
// alone); JSONL mirrors the field names, one object per record. Numbers are
// shortest-round-trip formatted, so rendering the same trace twice is
// byte-identical.
std::string render_trace(const Trace& trace, TraceFormat format, std::size_t dims);

// render_trace written to a file; throws std::runtime_error naming the path
// on I/O failure.
void export_trace(const Trace& trace, const std::filesystem::path& path, TraceFormat format,
                  std::size_t dims);

struct ExperimentOutput {
    std::vector<RunOutcome> outcomes;  // one per seed, in seed order
    std::vector<Trace> traces;         // parallel to outcomes; empty trace for failed runs
    SummaryStats summary;
    std::vector<std::filesystem::path> files_written;
};

// Runs one config: validates everything before the first run, executes one
// run per seed (a failing objective marks that run failed and the rest
// continue), aggregates summary stats, and writes trace files plus
// results.json and summary.json into output_dir when it is set. Re-running
// the same config produces byte-identical trace files.
ExperimentOutput run_experiment(const RunConfig& config,
                                const BenchmarkRegistry& registry = BenchmarkRegistry::builtin());

// One row per algorithm over a shared benchmark and evaluation budget.
struct ComparisonRow {
    Algorithm algorithm = Algorithm::hs;
    SummaryStats stats;
};

struct Comparison {
    std::string benchmark;
    std::int64_t budget_evals = 0;
    std::vector<ComparisonRow> rows;  // sorted by algorithm name
};

// Requires every config to name the same benchmark and imply the same
// evaluation ceiling; throws before running anything otherwise.
Comparison compare_algorithms(const std::vector<RunConfig>& configs,
                              const BenchmarkRegistry& registry = BenchmarkRegistry::builtin());

std::string comparison_to_text(const Comparison& comparison);
std::string comparison_to_csv(const Comparison& comparison);

// Output directory precedence: CLI --out, then the config's output_dir, then
// the HARMONIUM_OUT environment variable, then the current directory.
std::string resolve_output_dir(const std::string& cli_out, const std::string& config_out);

}  // namespace harmonium
