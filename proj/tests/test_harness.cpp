#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "harmonium/experiment.hpp"

using namespace harmonium;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / name;
    fs::remove_all(dir);
    return dir;
}

RunConfig minimal_config() {
    return parse_run_config(R"({
        "algorithm": "hs",
        "benchmark": "sphere",
        "seeds": [1],
        "budget": {"unit": "evaluations", "amount": 100}
    })");
}

}  // namespace

TEST_CASE("algorithm names round-trip") {
    for (Algorithm a : {Algorithm::hs, Algorithm::sa, Algorithm::ga, Algorithm::pso,
                        Algorithm::fa}) {
        CHECK(algorithm_from_string(to_string(a)) == a);
    }
    CHECK_THROWS_AS(algorithm_from_string("harmony"), std::invalid_argument);
    CHECK_THROWS_AS(algorithm_from_string(""), std::invalid_argument);
}

TEST_CASE("minimal config fills documented defaults") {
    const RunConfig config = minimal_config();
    CHECK(config.algorithm == Algorithm::hs);
    CHECK(config.benchmark == "sphere");
    CHECK(config.params == AlgorithmParams{HsParams{}});
    CHECK(config.seeds == std::vector<std::uint64_t>{1});
    CHECK(config.budget == Budget{Budget::Unit::evaluations, 100});
    CHECK(config.output_dir.empty());
    CHECK(config.trace_detail == TraceDetail::full);
    CHECK(config.trace_format == TraceFormat::csv);
    CHECK(!config.success_threshold.has_value());
}

TEST_CASE("config parse rejections carry diagnostics") {
    auto reject = [](const std::string& text) {
        CHECK_THROWS_AS(parse_run_config(text), std::invalid_argument);
    };
    reject("not json at all");
    reject("[1, 2, 3]");
    reject(R"({"benchmark":"sphere","seeds":[1],"budget":{"unit":"evaluations","amount":10}})");
    reject(R"({"algorithm":"hs","seeds":[1],"budget":{"unit":"evaluations","amount":10}})");
    reject(R"({"algorithm":"hs","benchmark":"","seeds":[1],"budget":{"unit":"evaluations","amount":10}})");
    reject(R"({"algorithm":"nope","benchmark":"sphere","seeds":[1],"budget":{"unit":"evaluations","amount":10}})");
    reject(R"({"algorithm":"hs","benchmark":"sphere","budget":{"unit":"evaluations","amount":10}})");
    reject(R"({"algorithm":"hs","benchmark":"sphere","seeds":[],"budget":{"unit":"evaluations","amount":10}})");
    reject(R"({"algorithm":"hs","benchmark":"sphere","seeds":[1.5],"budget":{"unit":"evaluations","amount":10}})");
    reject(R"({"algorithm":"hs","benchmark":"sphere","seeds":[-1],"budget":{"unit":"evaluations","amount":10}})");
    reject(R"({"algorithm":"hs","benchmark":"sphere","seeds":[1]})");
    reject(R"({"algorithm":"hs","benchmark":"sphere","seeds":[1],"budget":{"unit":"steps","amount":10}})");
    reject(R"({"algorithm":"hs","benchmark":"sphere","seeds":[1],"budget":{"unit":"evaluations","amount":-5}})");
    reject(R"({"algorithm":"hs","benchmark":"sphere","seeds":[1],"budget":{"unit":"evaluations","amount":10,"extra":1}})");
    reject(R"({"algorithm":"hs","benchmark":"sphere","seeds":[1],"budget":{"unit":"evaluations","amount":10},"bogus":true})");
    reject(R"({"algorithm":"hs","benchmark":"sphere","seeds":[1],"budget":{"unit":"evaluations","amount":10},"params":{"hms":5,"weird":1}})");
    reject(R"({"algorithm":"hs","benchmark":"sphere","seeds":[1],"budget":{"unit":"evaluations","amount":10},"params":{"max_iterations":5}})");
    reject(R"({"algorithm":"ga","benchmark":"sphere","seeds":[1],"budget":{"unit":"evaluations","amount":10},"params":{"max_generations":5}})");
    reject(R"({"algorithm":"sa","benchmark":"sphere","seeds":[1],"budget":{"unit":"evaluations","amount":10},"params":{"hms":5}})");
    reject(R"({"algorithm":"hs","benchmark":"sphere","seeds":[1],"budget":{"unit":"evaluations","amount":10},"trace_detail":"verbose"})");
    reject(R"({"algorithm":"hs","benchmark":"sphere","seeds":[1],"budget":{"unit":"evaluations","amount":10},"trace_format":"xml"})");
    reject(R"({"algorithm":"hs","benchmark":"sphere","seeds":[1],"budget":{"unit":"evaluations","amount":10},"success_threshold":"small"})");
    reject(R"({"algorithm":"hs","benchmark":"sphere","seeds":[1],"budget":{"unit":"evaluations","amount":10},"success_threshold":1e999})");
}

TEST_CASE("config serialization round-trips for every algorithm") {
    auto roundtrip = [](RunConfig config) {
        const RunConfig back = parse_run_config(serialize_run_config(config));
        CHECK(back == config);
    };

    RunConfig base = minimal_config();
    base.seeds = {1, 2, 9000000000000000000ULL};
    base.output_dir = "out/results";
    base.trace_detail = TraceDetail::summary;
    base.trace_format = TraceFormat::jsonl;
    base.success_threshold = 0.01;
    roundtrip(base);

    RunConfig sa = base;
    sa.algorithm = Algorithm::sa;
    sa.params = SaParams{.t0 = 2.0, .alpha = 0.99, .k = 1.5, .step_size = {0.5, 0.5}};
    roundtrip(sa);

    RunConfig ga = base;
    ga.algorithm = Algorithm::ga;
    ga.params = GaParams{.pop_size = 30, .p_c = 0.8, .p_m = 0.1, .elite_count = 1};
    roundtrip(ga);

    RunConfig pso = base;
    pso.algorithm = Algorithm::pso;
    pso.params = PsoParams{.swarm_size = 15, .alpha = 0.4, .beta = 0.6};
    roundtrip(pso);

    RunConfig fa = base;
    fa.algorithm = Algorithm::fa;
    fa.params = FaParams{.pop_size = 12, .alpha = 0.1, .beta = 0.9, .gamma = 0.5};
    roundtrip(fa);
}

TEST_CASE("config files load from disk") {
    const fs::path dir = fresh_dir("harmonium_cfg_test");
    fs::create_directories(dir);
    const fs::path path = dir / "config.json";
    RunConfig config = minimal_config();
    config.success_threshold = 0.5;
    {
        std::ofstream out(path, std::ios::binary);
        out << serialize_run_config(config);
    }
    CHECK(load_run_config(path) == config);
    CHECK_THROWS_AS(load_run_config(dir / "missing.json"), std::runtime_error);
    fs::remove_all(dir);
}

TEST_CASE("budget ceilings per unit") {
    RunConfig config = minimal_config();
    CHECK(budget_eval_ceiling(config) == 100);

    config.budget = {Budget::Unit::iterations, 50};
    CHECK(budget_eval_ceiling(config) == 20 + 50);  // hms + iterations

    config.algorithm = Algorithm::sa;
    config.params = SaParams{};
    CHECK_THROWS_AS(budget_eval_ceiling(config), std::invalid_argument);
}

TEST_CASE("experiment validation happens before any run") {
    RunConfig config = minimal_config();
    config.benchmark = "unregistered";
    CHECK_THROWS_AS(run_experiment(config), std::invalid_argument);

    config = minimal_config();
    config.algorithm = Algorithm::sa;  // params still hold hs knobs
    CHECK_THROWS_AS(run_experiment(config), std::invalid_argument);

    config = minimal_config();
    config.seeds.clear();
    CHECK_THROWS_AS(run_experiment(config), std::invalid_argument);

    config = minimal_config();
    config.budget.amount = 5;  // cannot cover hms=20 initialization
    CHECK_THROWS_AS(run_experiment(config), std::invalid_argument);

    config = minimal_config();
    config.budget = {Budget::Unit::iterations, 10};
    config.algorithm = Algorithm::pso;
    config.params = PsoParams{};
    CHECK_THROWS_AS(run_experiment(config), std::invalid_argument);
}

TEST_CASE("experiment honors the evaluation ceiling exactly") {
    RunConfig config = minimal_config();
    config.seeds = {3, 4};
    const ExperimentOutput output = run_experiment(config);
    REQUIRE(output.outcomes.size() == 2);
    for (const auto& outcome : output.outcomes) {
        CHECK(!outcome.failed);
        CHECK(outcome.result.eval_count == 100);
    }
    CHECK(output.traces.size() == 2);
    CHECK(output.traces[0].size() == 81);  // init record plus 100 - 20 iterations
    CHECK(output.summary.n_runs == 2);
    CHECK(output.files_written.empty());

    config.budget = {Budget::Unit::iterations, 30};
    const ExperimentOutput iterated = run_experiment(config);
    CHECK(iterated.outcomes[0].result.eval_count == 50);
    CHECK(iterated.traces[0].size() == 31);
}

TEST_CASE("experiment writes traces, results, and summary") {
    const fs::path dir = fresh_dir("harmonium_run_test");
    RunConfig config = minimal_config();
    config.seeds = {1, 2};
    config.output_dir = dir.string();
    config.success_threshold = 1.0;

    const ExperimentOutput output = run_experiment(config);
    REQUIRE(output.files_written.size() == 4);
    CHECK(fs::exists(dir / "trace_seed1.csv"));
    CHECK(fs::exists(dir / "trace_seed2.csv"));
    CHECK(fs::exists(dir / "results.json"));
    CHECK(fs::exists(dir / "summary.json"));

    const std::string trace_text = slurp(dir / "trace_seed1.csv");
    CHECK(trace_text.substr(0, trace_text.find('\n')) ==
          "iteration,eval_count,best_value,best_point_0,best_point_1,"
          "candidate_point_0,candidate_point_1,accepted");

    const std::string results_text = slurp(dir / "results.json");
    CHECK(results_text.find("\"seed\": 1") != std::string::npos);
    CHECK(results_text.find("\"params\"") != std::string::npos);
    const std::string summary_text = slurp(dir / "summary.json");
    CHECK(summary_text.find("\"n_runs\": 2") != std::string::npos);
    CHECK(summary_text.find("\"success_rate\"") != std::string::npos);

    // Re-running the identical config reproduces the trace and summary bytes.
    const fs::path dir2 = fresh_dir("harmonium_run_test2");
    RunConfig rerun = config;
    rerun.output_dir = dir2.string();
    run_experiment(rerun);
    CHECK(slurp(dir2 / "trace_seed1.csv") == trace_text);
    CHECK(slurp(dir2 / "trace_seed2.csv") == slurp(dir / "trace_seed2.csv"));
    CHECK(slurp(dir2 / "summary.json") == summary_text);

    fs::remove_all(dir);
    fs::remove_all(dir2);
}

TEST_CASE("summary trace detail suppresses trace files") {
    const fs::path dir = fresh_dir("harmonium_summary_test");
    RunConfig config = minimal_config();
    config.output_dir = dir.string();
    config.trace_detail = TraceDetail::summary;
    const ExperimentOutput output = run_experiment(config);
    REQUIRE(output.files_written.size() == 2);
    CHECK(!fs::exists(dir / "trace_seed1.csv"));
    CHECK(fs::exists(dir / "results.json"));
    CHECK(fs::exists(dir / "summary.json"));
    fs::remove_all(dir);
}

TEST_CASE("jsonl traces hold one parseable object per record") {
    const fs::path dir = fresh_dir("harmonium_jsonl_test");
    RunConfig config = minimal_config();
    config.budget.amount = 25;
    config.output_dir = dir.string();
    config.trace_format = TraceFormat::jsonl;
    const ExperimentOutput output = run_experiment(config);
    const fs::path trace_path = dir / "trace_seed1.jsonl";
    REQUIRE(fs::exists(trace_path));

    std::ifstream in(trace_path);
    std::string line;
    int lines = 0;
    while (std::getline(in, line)) {
        ++lines;
        CHECK(line.front() == '{');
        CHECK(line.back() == '}');
        CHECK(line.find("\"iteration\":") != std::string::npos);
        CHECK(line.find("\"best_point\":[") != std::string::npos);
    }
    CHECK(lines == static_cast<int>(output.traces[0].size()));
    fs::remove_all(dir);
}

TEST_CASE("summaries match hand-computed statistics") {
    auto outcome_with_best = [](std::uint64_t seed, double best) {
        RunOutcome outcome;
        outcome.seed = seed;
        outcome.result.best = {{0.0, 0.0}, best};
        outcome.result.eval_count = 10;
        return outcome;
    };
    auto trace_reaching = [](double value, std::int64_t at_evals) {
        // Starts above any threshold used here, drops to value at at_evals.
        return Trace{{0, 1, 100.0, {}, {}, true}, {1, at_evals, value, {}, {}, true}};
    };

    const std::vector<RunOutcome> outcomes = {
        outcome_with_best(1, 3.0), outcome_with_best(2, 1.0), outcome_with_best(3, 4.0),
        outcome_with_best(4, 2.0)};
    const std::vector<Trace> traces = {trace_reaching(3.0, 40), trace_reaching(1.0, 10),
                                       trace_reaching(4.0, 50), trace_reaching(2.0, 20)};

    const SummaryStats plain = summarize(outcomes, traces, std::nullopt);
    CHECK(plain.n_runs == 4);
    CHECK(plain.best_min == 1.0);
    CHECK(plain.best_max == 4.0);
    CHECK(plain.best_median == doctest::Approx(2.5).epsilon(1e-12));
    CHECK(plain.best_mean == doctest::Approx(2.5).epsilon(1e-12));
    CHECK(plain.best_stddev == doctest::Approx(std::sqrt(5.0 / 3.0)).epsilon(1e-12));
    CHECK(!plain.success_rate.has_value());
    CHECK(!plain.median_evals_to_threshold.has_value());

    const SummaryStats half = summarize(outcomes, traces, 2.0);
    CHECK(half.success_rate == doctest::Approx(0.5).epsilon(1e-12));
    // Two runs reach 2.0 (at 10 and 20 evals), two never do: median is infinite.
    REQUIRE(half.median_evals_to_threshold.has_value());
    CHECK(std::isinf(*half.median_evals_to_threshold));

    const SummaryStats most = summarize(outcomes, traces, 3.0);
    CHECK(most.success_rate == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(*most.median_evals_to_threshold == doctest::Approx(30.0).epsilon(1e-12));

    RunOutcome broken;
    broken.seed = 9;
    broken.failed = true;
    broken.error = "synthetic";
    const SummaryStats mixed = summarize({outcomes[0], broken, outcomes[1]},
                                         {traces[0], {}, traces[1]}, 1.5);
    CHECK(mixed.n_runs == 2);
    CHECK(mixed.best_median == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(mixed.success_rate == doctest::Approx(0.5).epsilon(1e-12));

    const SummaryStats lone = summarize({outcomes[0]}, {traces[0]}, std::nullopt);
    CHECK(lone.n_runs == 1);
    CHECK(lone.best_stddev == 0.0);
}

TEST_CASE("failed runs are recorded and the rest continue") {
    BenchmarkRegistry registry;
    registry.add(BenchmarkSpec{
        .name = "explosive",
        .dims = 1,
        .bounds = Bounds::cube(1, -1.0, 1.0),
        .known_optimum_point = std::nullopt,
        .known_optimum_value = std::nullopt,
        .fn = [](const SolutionVector&) -> double { throw std::runtime_error("boom"); },
    });
    auto calls = std::make_shared<int>(0);
    registry.add(BenchmarkSpec{
        .name = "fragile",
        .dims = 1,
        .bounds = Bounds::cube(1, -1.0, 1.0),
        .known_optimum_point = std::nullopt,
        .known_optimum_value = std::nullopt,
        .fn =
            [calls](const SolutionVector& p) -> double {
                if (++*calls > 30) throw std::runtime_error("wore out");
                return p[0] * p[0];
            },
    });

    RunConfig config;
    config.algorithm = Algorithm::hs;
    config.benchmark = "explosive";
    config.params = HsParams{.hms = 10};
    config.seeds = {7, 8};
    config.budget = {Budget::Unit::evaluations, 30};

    const ExperimentOutput all_failed = run_experiment(config, registry);
    REQUIRE(all_failed.outcomes.size() == 2);
    for (const auto& outcome : all_failed.outcomes) {
        CHECK(outcome.failed);
        CHECK(outcome.error.find("boom") != std::string::npos);
    }
    CHECK(all_failed.traces[0].empty());
    CHECK(all_failed.summary.n_runs == 0);
    CHECK(!all_failed.summary.success_rate.has_value());

    // The first run exhausts exactly 30 calls; the second dies on its first.
    config.benchmark = "fragile";
    const ExperimentOutput partial = run_experiment(config, registry);
    CHECK(!partial.outcomes[0].failed);
    CHECK(partial.outcomes[0].result.eval_count == 30);
    CHECK(partial.outcomes[1].failed);
    CHECK(partial.outcomes[1].error.find("wore out") != std::string::npos);
    CHECK(partial.traces[1].empty());
    CHECK(partial.summary.n_runs == 1);
}

TEST_CASE("comparisons require one benchmark and one budget") {
    RunConfig hs = minimal_config();
    hs.seeds = {1, 2};
    RunConfig sa = hs;
    sa.algorithm = Algorithm::sa;
    sa.params = SaParams{};

    const Comparison comparison = compare_algorithms({sa, hs});
    CHECK(comparison.benchmark == "sphere");
    CHECK(comparison.budget_evals == 100);
    REQUIRE(comparison.rows.size() == 2);
    CHECK(comparison.rows[0].algorithm == Algorithm::hs);  // sorted by name
    CHECK(comparison.rows[1].algorithm == Algorithm::sa);
    CHECK(comparison.rows[0].stats.n_runs == 2);

    const std::string csv = comparison_to_csv(comparison);
    CHECK(csv.substr(0, csv.find('\n')) ==
          "algorithm,n_runs,best_min,best_median,best_mean,best_max,best_stddev,"
          "success_rate,median_evals_to_threshold");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
    const std::string text = comparison_to_text(comparison);
    CHECK(text.find("benchmark: sphere") != std::string::npos);
    CHECK(text.find("budget_evals: 100") != std::string::npos);

    RunConfig other_bench = hs;
    other_bench.benchmark = "rosenbrock_log";
    CHECK_THROWS_AS(compare_algorithms({hs, other_bench}), std::invalid_argument);

    RunConfig other_budget = sa;
    other_budget.budget.amount = 200;
    CHECK_THROWS_AS(compare_algorithms({hs, other_budget}), std::invalid_argument);

    CHECK_THROWS_AS(compare_algorithms({}), std::invalid_argument);
}

TEST_CASE("comparison runs never write files") {
    const fs::path dir = fresh_dir("harmonium_compare_test");
    RunConfig config = minimal_config();
    config.output_dir = dir.string();
    compare_algorithms({config});
    CHECK(!fs::exists(dir));
}

TEST_CASE("output directory precedence") {
    unsetenv("HARMONIUM_OUT");
    CHECK(resolve_output_dir("cli", "cfg") == "cli");
    CHECK(resolve_output_dir("", "cfg") == "cfg");
    CHECK(resolve_output_dir("", "") == ".");
    setenv("HARMONIUM_OUT", "/tmp/env_out", 1);
    CHECK(resolve_output_dir("", "") == "/tmp/env_out");
    CHECK(resolve_output_dir("", "cfg") == "cfg");
    CHECK(resolve_output_dir("cli", "") == "cli");
    setenv("HARMONIUM_OUT", "", 1);
    CHECK(resolve_output_dir("", "") == ".");
    unsetenv("HARMONIUM_OUT");
}

TEST_CASE("trace rendering is exact") {
    const Trace trace = {{0, 5, 3.5, {1.5}, {1.5}, true}, {1, 6, 3.25, {1.25}, {-0.5}, false}};

    CHECK(render_trace(trace, TraceFormat::csv, 1) ==
          "iteration,eval_count,best_value,best_point_0,candidate_point_0,accepted\n"
          "0,5,3.5,1.5,1.5,true\n"
          "1,6,3.25,1.25,-0.5,false\n");
    CHECK(render_trace(trace, TraceFormat::jsonl, 1) ==
          "{\"iteration\":0,\"eval_count\":5,\"best_value\":3.5,\"best_point\":[1.5],"
          "\"candidate_point\":[1.5],\"accepted\":true}\n"
          "{\"iteration\":1,\"eval_count\":6,\"best_value\":3.25,\"best_point\":[1.25],"
          "\"candidate_point\":[-0.5],\"accepted\":false}\n");

    CHECK(render_trace({}, TraceFormat::csv, 2) ==
          "iteration,eval_count,best_value,best_point_0,best_point_1,"
          "candidate_point_0,candidate_point_1,accepted\n");
    CHECK(render_trace({}, TraceFormat::jsonl, 2).empty());

    CHECK_THROWS_AS(render_trace(trace, TraceFormat::csv, 2), std::invalid_argument);

    bool named = false;
    try {
        export_trace(trace, "/nonexistent_harmonium_dir/trace.csv", TraceFormat::csv, 1);
    } catch (const std::runtime_error& e) {
        named = std::string(e.what()).find("/nonexistent_harmonium_dir/trace.csv") !=
                std::string::npos;
    }
    CHECK(named);
}
