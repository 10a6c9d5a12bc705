#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "harmonium/harmonium.hpp"
#include "harmonium/text.hpp"

namespace {

using namespace harmonium;

std::string point_text(const SolutionVector& point) {
    std::string out = "(";
    for (std::size_t i = 0; i < point.size(); ++i) {
        if (i != 0) out += ", ";
        out += format_double(point[i]);
    }
    return out + ")";
}

int cmd_run(const std::string& config_path, const std::string& cli_out, bool have_seed_override,
            std::uint64_t seed_override) {
    RunConfig config = load_run_config(config_path);
    if (have_seed_override) config.seeds = {seed_override};
    config.output_dir = resolve_output_dir(cli_out, config.output_dir);

    const ExperimentOutput output = run_experiment(config);

    std::cout << "algorithm: " << to_string(config.algorithm)
              << "  benchmark: " << config.benchmark << "  seeds: " << config.seeds.size()
              << "  budget_evals: " << budget_eval_ceiling(config) << "\n";
    bool any_failed = false;
    for (const auto& outcome : output.outcomes) {
        if (outcome.failed) {
            any_failed = true;
            std::cout << "seed " << outcome.seed << "  FAILED: " << outcome.error << "\n";
            continue;
        }
        std::cout << "seed " << outcome.seed << "  best "
                  << format_double(outcome.result.best.value) << " at "
                  << point_text(outcome.result.best.point) << "  evals "
                  << outcome.result.eval_count << "  " << outcome.result.wall_time_ms << " ms\n";
    }

    const SummaryStats& s = output.summary;
    std::cout << "summary: n_runs " << s.n_runs << "  min " << format_double(s.best_min)
              << "  median " << format_double(s.best_median) << "  mean "
              << format_double(s.best_mean) << "  max " << format_double(s.best_max)
              << "  stddev " << format_double(s.best_stddev) << "\n";
    if (s.success_rate) {
        std::cout << "success_rate " << format_double(*s.success_rate) << " (threshold "
                  << format_double(*config.success_threshold) << ")";
        if (s.median_evals_to_threshold)
            std::cout << "  median_evals_to_threshold "
                      << format_double(*s.median_evals_to_threshold);
        std::cout << "\n";
    }
    for (const auto& path : output.files_written) std::cout << "wrote " << path.string() << "\n";

    return any_failed ? 1 : 0;
}

int cmd_compare(const std::vector<std::string>& config_paths, bool as_csv) {
    std::vector<RunConfig> configs;
    configs.reserve(config_paths.size());
    for (const auto& path : config_paths) configs.push_back(load_run_config(path));

    const Comparison comparison = compare_algorithms(configs);
    std::cout << (as_csv ? comparison_to_csv(comparison) : comparison_to_text(comparison));
    return 0;
}

int cmd_bench_list() {
    const BenchmarkRegistry& registry = BenchmarkRegistry::builtin();
    for (const auto& name : registry.names()) {
        const BenchmarkSpec& spec = registry.get(name);
        std::cout << name << "  dims " << spec.dims << "  bounds [";
        for (std::size_t i = 0; i < spec.dims; ++i) {
            if (i != 0) std::cout << " x ";
            std::cout << format_double(spec.bounds.lower(i)) << ","
                      << format_double(spec.bounds.upper(i));
        }
        std::cout << "]";
        if (spec.known_optimum_value && spec.known_optimum_point)
            std::cout << "  optimum " << format_double(*spec.known_optimum_value) << " near "
                      << point_text(*spec.known_optimum_point);
        std::cout << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Harmony-search optimization toolkit"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    std::uint64_t seed_override = 0;
    auto* run_cmd = app.add_subcommand("run", "Execute a seeded experiment from a config file");
    run_cmd->add_option("--config", config_path, "Config file (JSON)")
        ->required()
        ->check(CLI::ExistingFile);
    auto* seed_opt = run_cmd->add_option(
        "--seed-override", seed_override, "Replace the config's seed list with this single seed");
    run_cmd->add_option("--out", out_dir,
                        "Output directory (overrides the config and the HARMONIUM_OUT variable)");

    std::vector<std::string> compare_paths;
    bool compare_csv = false;
    auto* compare_cmd = app.add_subcommand(
        "compare", "Run several configs on one benchmark and tabulate their summaries");
    compare_cmd->add_option("--configs", compare_paths, "Config files, one per algorithm")
        ->required()
        ->expected(1, -1)
        ->check(CLI::ExistingFile);
    compare_cmd->add_flag("--csv", compare_csv, "Emit CSV instead of the aligned table");

    auto* bench_cmd = app.add_subcommand("bench-list", "List the built-in benchmark functions");
    auto* selftest_cmd =
        app.add_subcommand("selftest", "Run the built-in oracle checks and report each one");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed())
            return cmd_run(config_path, out_dir, seed_opt->count() > 0, seed_override);
        if (compare_cmd->parsed()) return cmd_compare(compare_paths, compare_csv);
        if (bench_cmd->parsed()) return cmd_bench_list();
        if (selftest_cmd->parsed()) return harmonium::run_selftest(std::cout) ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
