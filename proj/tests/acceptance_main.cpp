// Acceptance gate: one PASS/FAIL line per criterion, exit code = number of
// failures. Statistical thresholds are fixed; run it with `ctest` or directly.
#include <algorithm>
#include <cmath>
#include <iostream>
#include <string>
#include <vector>

#include "harmonium/harmonium.hpp"

using namespace harmonium;

namespace {

struct Criterion {
    int number = 0;
    bool pass = false;
    std::string detail;
};

double median(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

std::vector<std::uint64_t> seeds_1_to_30() {
    std::vector<std::uint64_t> seeds(30);
    for (std::size_t i = 0; i < seeds.size(); ++i) seeds[i] = i + 1;
    return seeds;
}

HsParams reference_hs_params(std::int64_t iterations) {
    return HsParams{.hms = 20, .r_accept = 0.95, .r_pa = 0.7, .max_iterations = iterations};
}

// Log-banana: 30 seeds, 15,000 improvisations at the reference parameters.
// At least 27 runs must land within L-inf 0.1 of (1,1) with value <= 1e-2,
// and the median best value must be <= 1e-3.
Criterion criterion_banana() {
    const ObjectiveFunction objective =
        BenchmarkRegistry::builtin().get("rosenbrock_log").objective();
    int hits = 0;
    std::vector<double> bests;
    for (const std::uint64_t seed : seeds_1_to_30()) {
        const RunOutput run = run_hs(objective, reference_hs_params(15000), seed);
        const double dx = std::abs(run.result.best.point[0] - 1.0);
        const double dy = std::abs(run.result.best.point[1] - 1.0);
        if (std::max(dx, dy) <= 0.1 && run.result.best.value <= 1e-2) ++hits;
        bests.push_back(run.result.best.value);
    }
    const double med = median(bests);
    return {1, hits >= 27 && med <= 1e-3,
            format_int(hits) + "/30 runs near (1,1) with value <= 1e-2 (need 27); median best " +
                format_double(med) + " (need <= 0.001)"};
}

// Ridge landscape: same parameters, 25,000-evaluation budget; at least 24 of
// 30 seeds must reach a best value <= -1.79.
Criterion criterion_ridge() {
    const ObjectiveFunction objective =
        BenchmarkRegistry::builtin().get("michalewicz2").objective();
    int hits = 0;
    for (const std::uint64_t seed : seeds_1_to_30()) {
        const RunOutput run = run_hs(objective, reference_hs_params(25000 - 20), seed);
        if (run.result.best.value <= -1.79) ++hits;
    }
    return {2, hits >= 24, format_int(hits) + "/30 runs reach <= -1.79 (need 24)"};
}

// Branch law: 100,000 single-variable improvisations at r_accept = 0.9,
// r_pa = 0.3 put the randomization fraction in 0.100 +- 0.004 and the
// pitch-adjust fraction in 0.270 +- 0.006 (4-sigma binomial bands).
Criterion criterion_branch_rates() {
    const Bounds box = Bounds::cube(1, -10.0, 10.0);
    RngStream rng(2024);
    std::vector<EvaluatedSolution> members;
    for (int i = 0; i < 20; ++i) members.push_back({uniform_point(box, rng), 0.0});
    const HarmonyMemory memory(std::move(members));
    const HsParams params{.r_accept = 0.9, .r_pa = 0.3, .b_range = {0.6}};

    BranchTally tally;
    const int n = 100000;
    for (int i = 0; i < n; ++i) improvise(memory, params, box, rng, &tally);
    const double random_frac = static_cast<double>(tally.random) / n;
    const double pitch_frac = static_cast<double>(tally.pitch) / n;
    const bool pass =
        std::abs(random_frac - 0.1) <= 0.004 && std::abs(pitch_frac - 0.27) <= 0.006;
    return {3, pass,
            "randomization fraction " + format_double(random_frac) +
                " (want 0.1 +- 0.004), pitch fraction " + format_double(pitch_frac) +
                " (want 0.27 +- 0.006)"};
}

// Every built-in oracle example passes.
Criterion criterion_selftest() {
    const std::vector<SelfTestCase> cases = selftest_cases();
    int failed = 0;
    std::string first_failure;
    for (const auto& test : cases) {
        if (!test.passed) {
            ++failed;
            if (first_failure.empty()) first_failure = test.name + ": " + test.detail;
        }
    }
    std::string detail = format_int(static_cast<std::int64_t>(cases.size()) - failed) + "/" +
                         format_int(static_cast<std::int64_t>(cases.size())) +
                         " oracle examples pass";
    if (failed > 0) detail += " (first failure: " + first_failure + ")";
    return {4, failed == 0, detail};
}

// Every algorithm on every benchmark, 3 seeds, 2,000-evaluation budget:
// non-increasing best values, exact evaluation accounting, byte-identical
// re-renders of re-run traces.
Criterion criterion_trace_discipline() {
    const std::vector<std::pair<Algorithm, std::int64_t>> expected_evals = {
        {Algorithm::hs, 2000},   // 20 init + 1980 improvisations
        {Algorithm::sa, 2000},   // 1 init + 1999 proposals
        {Algorithm::ga, 1970},   // 50 init + 40 generations of 48 children
        {Algorithm::pso, 2000},  // 20 particles x 100 evaluation rounds
        {Algorithm::fa, 2000},   // 25 fireflies x 80 evaluation rounds
    };
    for (const auto& [algorithm, expected] : expected_evals) {
        for (const std::string& benchmark : BenchmarkRegistry::builtin().names()) {
            RunConfig config;
            config.algorithm = algorithm;
            config.benchmark = benchmark;
            switch (algorithm) {
                case Algorithm::hs: config.params = HsParams{}; break;
                case Algorithm::sa: config.params = SaParams{}; break;
                case Algorithm::ga: config.params = GaParams{}; break;
                case Algorithm::pso: config.params = PsoParams{}; break;
                case Algorithm::fa: config.params = FaParams{}; break;
            }
            config.seeds = {1, 2, 3};
            config.budget = {Budget::Unit::evaluations, 2000};

            const ExperimentOutput first = run_experiment(config);
            const ExperimentOutput second = run_experiment(config);
            for (std::size_t i = 0; i < first.outcomes.size(); ++i) {
                const std::string where = to_string(algorithm) + " on " + benchmark + " seed " +
                                          format_int(static_cast<std::int64_t>(i + 1));
                if (first.outcomes[i].failed)
                    return {5, false, where + " failed: " + first.outcomes[i].error};
                if (first.outcomes[i].result.eval_count != expected)
                    return {5, false,
                            where + " used " + format_int(first.outcomes[i].result.eval_count) +
                                " evaluations, expected " + format_int(expected)};
                const Trace& trace = first.traces[i];
                for (std::size_t t = 1; t < trace.size(); ++t) {
                    if (trace[t].best_value > trace[t - 1].best_value)
                        return {5, false, where + " best value increased at iteration " +
                                              format_int(trace[t].iteration)};
                    if (trace[t].eval_count <= trace[t - 1].eval_count)
                        return {5, false, where + " eval_count not increasing at iteration " +
                                              format_int(trace[t].iteration)};
                }
                if (render_trace(trace, TraceFormat::csv, 2) !=
                    render_trace(second.traces[i], TraceFormat::csv, 2))
                    return {5, false, where + " re-run renders different trace bytes"};
            }
        }
    }
    return {5, true,
            "5 algorithms x 3 benchmarks x 3 seeds: monotone traces, exact accounting, "
            "byte-identical re-runs"};
}

// Empirical Metropolis acceptance at three (delta_e, T) points, 1e5 draws
// each, within 4-sigma binomial bands.
Criterion criterion_metropolis_rates() {
    RngStream rng(7777);
    const int n = 100000;
    std::string detail;
    bool pass = true;
    for (const auto& [delta_e, temperature] :
         std::vector<std::pair<double, double>>{{1.0, 1.0}, {1.0, 2.0}, {2.0, 1.0}}) {
        const double p = sa_accept_probability(delta_e, temperature);
        int accepted = 0;
        for (int i = 0; i < n; ++i)
            if (rng.next_double() < p) ++accepted;
        const double rate = static_cast<double>(accepted) / n;
        const double band = 4.0 * std::sqrt(p * (1.0 - p) / n);
        if (std::abs(rate - p) > band) pass = false;
        if (!detail.empty()) detail += ", ";
        detail += "(" + format_double(delta_e) + "," + format_double(temperature) + ") rate " +
                  format_double(rate) + " vs " + format_double(p) + " +- " + format_double(band);
    }
    return {6, pass, detail};
}

// Each baseline reaches best value <= 0.1 on the log-banana within 50,000
// evaluations in at least 21 of 30 seeds. Parameter sets were frozen from the
// committed pilot tool's sweeps.
Criterion criterion_baselines() {
    const ObjectiveFunction objective =
        BenchmarkRegistry::builtin().get("rosenbrock_log").objective();
    const auto count_hits = [&](auto&& runner) {
        int hits = 0;
        for (const std::uint64_t seed : seeds_1_to_30())
            if (runner(seed).result.best.value <= 0.1) ++hits;
        return hits;
    };

    const SaParams sa{.t0 = 1.0, .alpha = 0.9995, .k = 1.0, .step_size = {0.1, 0.1},
                      .max_iterations = 49999};
    const GaParams ga{.pop_size = 50, .p_c = 0.85, .p_m = 0.1, .mutation_scale = {0.3, 0.3},
                      .elite_count = 2, .max_generations = 1040};
    const PsoParams pso{.swarm_size = 20, .alpha = 0.5, .beta = 0.5, .max_iterations = 2499};
    const FaParams fa{.pop_size = 25, .alpha = 0.05, .beta = 1.0, .gamma = 0.01,
                      .max_iterations = 1999};

    const int sa_hits = count_hits([&](std::uint64_t s) { return run_sa(objective, sa, s); });
    const int ga_hits = count_hits([&](std::uint64_t s) { return run_ga(objective, ga, s); });
    const int pso_hits = count_hits([&](std::uint64_t s) { return run_pso(objective, pso, s); });
    const int fa_hits = count_hits([&](std::uint64_t s) { return run_fa(objective, fa, s); });

    const bool pass = sa_hits >= 21 && ga_hits >= 21 && pso_hits >= 21 && fa_hits >= 21;
    return {7, pass,
            "runs reaching <= 0.1 of 30 (need 21): sa " + format_int(sa_hits) + ", ga " +
                format_int(ga_hits) + ", pso " + format_int(pso_hits) + ", fa " +
                format_int(fa_hits)};
}

// Attractiveness limit cases, plus a frozen-population check: with no random
// walk and extreme absorption, unit-separated fireflies do not move.
Criterion criterion_firefly_limits() {
    if (fa_attractiveness(2.0, 1.0, 0.0) != 2.0)
        return {8, false, "attractiveness at r=0 is not beta"};
    for (const double r : {0.0, 1.0, 10.0, 1000.0}) {
        if (fa_attractiveness(1.0, 0.0, r) != 1.0)
            return {8, false, "attractiveness with gamma=0 is not constant"};
    }

    const Bounds box = Bounds::cube(1, -10.0, 10.0);
    std::vector<SolutionVector> positions = {{0.0}, {1.0}, {2.0}, {3.0}, {4.0}};
    const std::vector<SolutionVector> before = positions;
    const std::vector<double> values = {4.0, 3.0, 2.0, 1.0, 0.0};
    const FaParams params{.alpha = 0.0, .beta = 1.0, .gamma = 1e6};
    RngStream rng(55);
    fa_move(positions, values, params, box, rng);

    double total_displacement = 0.0;
    for (std::size_t i = 0; i < positions.size(); ++i)
        total_displacement += std::abs(positions[i][0] - before[i][0]);
    return {8, total_displacement <= 1e-6,
            "total displacement " + format_double(total_displacement) + " (need <= 1e-6)"};
}

}  // namespace

int main() {
    const std::vector<Criterion> results = {
        criterion_banana(),     criterion_ridge(),            criterion_branch_rates(),
        criterion_selftest(),   criterion_trace_discipline(), criterion_metropolis_rates(),
        criterion_baselines(),  criterion_firefly_limits(),
    };

    int failures = 0;
    for (const auto& result : results) {
        std::cout << (result.pass ? "PASS" : "FAIL") << " criterion " << result.number << ": "
                  << result.detail << "\n";
        if (!result.pass) ++failures;
    }
    return failures;
}
