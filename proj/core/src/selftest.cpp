#include "harmonium/selftest.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "harmonium/experiment.hpp"
#include "harmonium/harmonium.hpp"
#include "harmonium/text.hpp"

namespace harmonium {

namespace {

void check(bool condition, const std::string& message) {
    if (!condition) throw std::runtime_error(message);
}

// Relative comparison with an absolute fallback for zero expectations.
void check_close(double actual, double expected, double tolerance, const std::string& what) {
    const bool ok = expected == 0.0
                        ? std::abs(actual) <= tolerance
                        : std::abs(actual - expected) <= tolerance * std::abs(expected);
    check(ok, what + ": got " + format_double(actual) + ", expected " + format_double(expected));
}

void add_case(std::vector<SelfTestCase>& out, const std::string& name,
              const std::function<void()>& body) {
    SelfTestCase result{name, true, ""};
    try {
        body();
    } catch (const std::exception& e) {
        result.passed = false;
        result.detail = e.what();
    }
    out.push_back(std::move(result));
}

ObjectiveFunction sphere_objective() { return BenchmarkRegistry::builtin().get("sphere").objective(); }

ObjectiveFunction banana_objective() {
    return BenchmarkRegistry::builtin().get("rosenbrock_log").objective();
}

constexpr double kRel = 1e-6;

}  // namespace

std::vector<SelfTestCase> selftest_cases() {
    std::vector<SelfTestCase> cases;

    // -- bounds and sampling ------------------------------------------------
    add_case(cases, "clamp saturates above the upper bound", [] {
        check(clamp({5.0}, Bounds::cube(1, 0.0, 1.0)) == SolutionVector{1.0}, "expected [1]");
    });
    add_case(cases, "clamp is the identity inside bounds", [] {
        check(clamp({0.5}, Bounds::cube(1, 0.0, 1.0)) == SolutionVector{0.5}, "expected [0.5]");
    });
    add_case(cases, "clamp acts per component", [] {
        check(clamp({-3.2, 0.0}, Bounds::cube(2, -1.0, 1.0)) == SolutionVector{-1.0, 0.0},
              "expected [-1, 0]");
    });
    add_case(cases, "degenerate bounds are rejected", [] {
        try {
            const Bounds rejected({0.0}, {0.0});
            (void)rejected;
            throw std::runtime_error("lower == upper was accepted");
        } catch (const std::invalid_argument&) {
        }
    });
    add_case(cases, "uniform points stay inside bounds", [] {
        const Bounds box = Bounds::cube(1, -1.0, 1.0);
        for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
            RngStream rng(seed);
            for (int i = 0; i < 100; ++i)
                check(box.contains(uniform_point(box, rng)), "point escaped [-1,1]");
        }
    });
    add_case(cases, "uniform sample mean is near one half", [] {
        RngStream rng(42);
        double sum = 0.0;
        const int n = 100000;
        for (int i = 0; i < n; ++i) sum += rng.next_double();
        const double mean = sum / n;
        check(std::abs(mean - 0.5) <= 0.01, "mean " + format_double(mean) + " outside 0.5+-0.01");
    });

    // -- improvisation branch law -------------------------------------------
    add_case(cases, "branch probabilities at the default rates", [] {
        const BranchProbabilities p = branch_probabilities({.r_accept = 0.95, .r_pa = 0.7});
        check_close(p.random, 0.05, kRel, "p_random");
        check_close(p.pitch, 0.665, kRel, "p_pitch");
        check_close(p.memory_only, 0.285, kRel, "p_memory_only");
    });
    add_case(cases, "pure memory branch probabilities", [] {
        const BranchProbabilities p = branch_probabilities({.r_accept = 1.0, .r_pa = 0.0});
        check(p.memory_only == 1.0 && p.pitch == 0.0 && p.random == 0.0, "expected (1, 0, 0)");
    });
    add_case(cases, "pure randomization branch probabilities", [] {
        const BranchProbabilities p = branch_probabilities({.r_accept = 0.0, .r_pa = 0.7});
        check(p.memory_only == 0.0 && p.pitch == 0.0 && p.random == 1.0, "expected (0, 0, 1)");
    });

    // -- pitch adjustment ----------------------------------------------------
    add_case(cases, "pitch adjustment direct value", [] {
        check_close(pitch_adjust(1.0, 0.1, 0.5), 1.05, kRel, "pitch_adjust(1, 0.1, 0.5)");
    });
    add_case(cases, "pitch adjustment is the identity at zero epsilon", [] {
        for (double x : {-2.0, 0.0, 3.5})
            check(pitch_adjust(x, 0.4, 0.0) == x, "expected x unchanged");
    });
    add_case(cases, "pitch adjustment lower extreme", [] {
        check_close(pitch_adjust(2.0, 0.2, -1.0), 1.8, kRel, "pitch_adjust(2, 0.2, -1)");
    });

    // -- harmony memory ------------------------------------------------------
    add_case(cases, "memory init on a constant objective", [] {
        const ObjectiveFunction constant{"const7", Bounds::cube(2, -1.0, 1.0),
                                         [](const SolutionVector&) { return 7.0; }};
        EvalCounter counter(constant);
        RngStream rng(5);
        const HarmonyMemory memory = init_memory(counter, {.hms = 2}, rng);
        check(memory.size() == 2, "expected 2 members");
        check(memory.member(0).value == 7.0 && memory.member(1).value == 7.0,
              "expected both values 7");
        check(memory.best_index() < 2 && memory.worst_index() < 2, "indices out of range");
    });
    add_case(cases, "memory init stays inside the banana domain", [] {
        const ObjectiveFunction objective = banana_objective();
        EvalCounter counter(objective);
        RngStream rng(7);
        const HarmonyMemory memory = init_memory(counter, {.hms = 20}, rng);
        for (std::size_t i = 0; i < memory.size(); ++i)
            check(objective.bounds.contains(memory.member(i).point), "member escaped bounds");
    });
    add_case(cases, "memory init spends one evaluation per member", [] {
        const ObjectiveFunction objective = sphere_objective();
        EvalCounter counter(objective);
        RngStream rng(9);
        init_memory(counter, {.hms = 20}, rng);
        check(counter.count() == 20, "expected 20 evaluations, got " +
                                         format_int(counter.count()));
    });
    add_case(cases, "worse candidate leaves the memory unchanged", [] {
        HarmonyMemory memory({{{0.0}, 1.0}, {{1.0}, 2.0}});
        check(!memory.consider({{2.0}, 3.0}), "worse candidate was accepted");
        check(memory.worst().value == 2.0, "memory changed");
    });
    add_case(cases, "better candidate replaces the worst and leads", [] {
        HarmonyMemory memory({{{0.0}, 1.0}, {{1.0}, 2.0}});
        check(memory.consider({{0.5}, 0.0}), "improving candidate was rejected");
        check(memory.best().value == 0.0, "candidate did not become the best");
        check(memory.worst().value == 1.0, "old worst survived");
    });
    add_case(cases, "tied candidate leaves the memory unchanged", [] {
        HarmonyMemory memory({{{0.0}, 1.0}, {{1.0}, 2.0}});
        check(!memory.consider({{0.5}, 2.0}), "tie was accepted");
    });

    // -- improvisation -------------------------------------------------------
    add_case(cases, "memory-only improvisation draws stored components", [] {
        const Bounds box = Bounds::cube(2, -10.0, 10.0);
        const HarmonyMemory memory(
            {{{1.0, -2.0}, 0.0}, {{3.5, 0.5}, 1.0}, {{-7.0, 9.0}, 2.0}});
        HsParams params{.r_accept = 1.0, .r_pa = 0.0};
        params = resolve_hs_defaults(std::move(params), box);
        RngStream rng(11);
        for (int n = 0; n < 50; ++n) {
            const SolutionVector x = improvise(memory, params, box, rng);
            for (std::size_t d = 0; d < 2; ++d) {
                bool from_memory = false;
                for (std::size_t m = 0; m < memory.size(); ++m)
                    if (x[d] == memory.member(m).point[d]) from_memory = true;
                check(from_memory, "component not drawn from memory");
            }
        }
    });
    add_case(cases, "full randomization improvises inside the domain", [] {
        const Bounds box = Bounds::cube(2, -10.0, 10.0);
        const HarmonyMemory memory({{{1.0, 1.0}, 0.0}});
        HsParams params{.r_accept = 0.0};
        params = resolve_hs_defaults(std::move(params), box);
        RngStream rng(13);
        for (int n = 0; n < 50; ++n)
            check(box.contains(improvise(memory, params, box, rng)), "candidate escaped bounds");
    });
    add_case(cases, "tiny bandwidth keeps improvisation near memory", [] {
        const Bounds box = Bounds::cube(2, -10.0, 10.0);
        const HarmonyMemory memory({{{1.0, -2.0}, 0.0}, {{3.5, 0.5}, 1.0}});
        const HsParams params{
            .r_accept = 1.0, .r_pa = 1.0, .b_range = {1e-9, 1e-9}};
        RngStream rng(17);
        for (int n = 0; n < 50; ++n) {
            const SolutionVector x = improvise(memory, params, box, rng);
            for (std::size_t d = 0; d < 2; ++d) {
                double nearest = 1e300;
                for (std::size_t m = 0; m < memory.size(); ++m)
                    nearest = std::min(nearest, std::abs(x[d] - memory.member(m).point[d]));
                check(nearest <= 1e-9, "component drifted beyond the bandwidth");
            }
        }
    });
    add_case(cases, "zero-iteration run reports the initial best", [] {
        const ObjectiveFunction objective = sphere_objective();
        const RunOutput run = run_hs(objective, {.hms = 5, .max_iterations = 0}, 3);
        check(run.trace.size() == 1, "expected the init record only");
        check(run.result.eval_count == 5, "expected 5 evaluations");
        check(run.result.best.value == run.trace.front().best_value,
              "result best disagrees with the trace");
    });

    // -- annealing -----------------------------------------------------------
    add_case(cases, "level moves are always accepted", [] {
        for (double t : {0.5, 1.0, 2.0})
            check(sa_accept_probability(0.0, t, 1.0) == 1.0, "expected probability 1");
    });
    add_case(cases, "acceptance at unit energy-temperature ratio", [] {
        for (double t : {1.0, 2.0})
            check_close(sa_accept_probability(t, t, 1.0), std::exp(-1.0), kRel,
                        "exp(-1) acceptance");
    });
    add_case(cases, "improving moves are always accepted", [] {
        check(sa_accept_probability(-5.0, 1.0, 1.0) == 1.0, "expected probability 1");
    });
    add_case(cases, "worsening moves freeze out at tiny temperature", [] {
        check(sa_accept_probability(0.1, 1e-12, 1.0) < 1e-300, "expected probability near 0");
    });
    add_case(cases, "cooling starts at t0", [] {
        check_close(geometric_cooling(100.0, 0.9, 0), 100.0, kRel, "T(0)");
    });
    add_case(cases, "cooling after two steps", [] {
        check_close(geometric_cooling(100.0, 0.9, 2), 81.0, kRel, "T(2)");
    });
    add_case(cases, "cooling decreases strictly", [] {
        for (std::int64_t t = 0; t < 20; ++t)
            check(geometric_cooling(10.0, 0.95, t + 1) < geometric_cooling(10.0, 0.95, t),
                  "temperature failed to decrease");
    });
    add_case(cases, "hot chain accepts nearly every proposal", [] {
        const ObjectiveFunction objective = sphere_objective();
        const SaParams params{
            .t0 = 1e6, .alpha = 0.999999, .step_size = {1.0, 1.0}, .max_iterations = 200};
        const RunOutput run = run_sa(objective, params, 19);
        std::int64_t accepted = 0;
        for (std::size_t i = 1; i < run.trace.size(); ++i)
            if (run.trace[i].accepted) ++accepted;
        check(accepted >= 180, "hot chain accepted only " + format_int(accepted) + "/200");
    });

    // -- genetic algorithm ---------------------------------------------------
    add_case(cases, "relative fitness of a uniform population", [] {
        const std::vector<double> p = relative_fitness({1.0, 1.0, 1.0, 1.0});
        for (const double v : p) check_close(v, 0.25, kRel, "uniform share");
    });
    add_case(cases, "relative fitness direct ratio", [] {
        const std::vector<double> p = relative_fitness({1.0, 3.0});
        check_close(p[0], 0.25, kRel, "first share");
        check_close(p[1], 0.75, kRel, "second share");
    });
    add_case(cases, "relative fitness is normalized", [] {
        const std::vector<double> p = relative_fitness({0.3, 1.7, 2.2, 0.01, 5.0});
        double sum = 0.0;
        for (const double v : p) sum += v;
        check_close(sum, 1.0, 1e-12, "normalization");
    });
    add_case(cases, "population is static without variation operators", [] {
        const ObjectiveFunction objective = sphere_objective();
        const GaParams params{.pop_size = 6,
                              .p_c = 0.0,
                              .p_m = 0.0,
                              .mutation_scale = {1.0, 1.0},
                              .elite_count = 5,
                              .max_generations = 5};
        const RunOutput run = run_ga(objective, params, 23);
        for (const auto& record : run.trace)
            check(record.best_value == run.trace.front().best_value,
                  "best moved without variation operators");
    });
    add_case(cases, "saturating mutation still respects bounds and budget", [] {
        const ObjectiveFunction objective = sphere_objective();
        const GaParams params{.pop_size = 8,
                              .p_c = 0.5,
                              .p_m = 1.0,
                              .mutation_scale = {1000.0, 1000.0},
                              .elite_count = 1,
                              .max_generations = 5};
        const RunOutput run = run_ga(objective, params, 29);
        check(objective.bounds.contains(run.result.best.point), "best escaped bounds");
        check(run.result.eval_count == 8 + 5 * 7, "evaluation count mismatch");
    });
    add_case(cases, "default rates sit inside the recommended bands", [] {
        const GaParams defaults;
        check(defaults.p_c >= 0.7 && defaults.p_c <= 0.99, "crossover default out of band");
        check(defaults.p_m >= 0.001 && defaults.p_m <= 0.1, "mutation default out of band");
    });

    // -- particle swarm ------------------------------------------------------
    add_case(cases, "null update leaves the particle still", [] {
        const Bounds box = Bounds::cube(2, -10.0, 10.0);
        RngStream rng(31);
        const SolutionVector x{1.0, -2.0};
        const SolutionVector v{0.0, 0.0};
        const auto [x2, v2] = pso_update(x, v, {3.0, 3.0}, {-4.0, 4.0},
                                         {.alpha = 0.0, .beta = 0.0}, box, rng);
        check(x2 == x && v2 == v, "particle moved under a null update");
    });
    add_case(cases, "aligned particle keeps its velocity", [] {
        const Bounds box = Bounds::cube(2, -10.0, 10.0);
        RngStream rng(37);
        const SolutionVector x{1.0, -2.0};
        const SolutionVector v{0.3, -0.2};
        const auto [x2, v2] = pso_update(x, v, x, x, {.alpha = 0.5, .beta = 0.5}, box, rng);
        check(v2 == v, "velocity changed with zero attraction terms");
        check(x2 == SolutionVector{1.3, -2.2}, "position did not drift by v");
    });
    add_case(cases, "ballistic drift without attraction", [] {
        const Bounds box = Bounds::cube(2, -10.0, 10.0);
        RngStream rng(41);
        SolutionVector x{0.0, 0.0};
        SolutionVector v{0.5, -1.0};
        for (int step = 1; step <= 3; ++step) {
            const auto [x2, v2] =
                pso_update(x, v, {5.0, 5.0}, {-5.0, -5.0}, {.alpha = 0.0, .beta = 0.0}, box, rng);
            x = x2;
            v = v2;
            check_close(x[0], 0.5 * step, kRel, "x drift");
            check_close(x[1], -1.0 * step, kRel, "y drift");
        }
    });
    add_case(cases, "swarm global best never worsens", [] {
        const ObjectiveFunction objective = sphere_objective();
        const RunOutput run =
            run_pso(objective, {.swarm_size = 5, .max_iterations = 50}, 43);
        for (std::size_t i = 1; i < run.trace.size(); ++i)
            check(run.trace[i].best_value <= run.trace[i - 1].best_value,
                  "global best worsened");
    });
    add_case(cases, "swarm evaluation accounting is exact", [] {
        const ObjectiveFunction objective = banana_objective();
        const RunOutput run =
            run_pso(objective, {.swarm_size = 5, .max_iterations = 10}, 47);
        check(run.result.eval_count == 5 * 11, "expected swarm_size * (1 + iterations)");
    });

    // -- firefly -------------------------------------------------------------
    add_case(cases, "attractiveness at zero distance", [] {
        check(fa_attractiveness(2.0, 1.0, 0.0) == 2.0, "expected beta");
    });
    add_case(cases, "attractiveness without absorption", [] {
        for (double r : {0.0, 1.0, 10.0})
            check(fa_attractiveness(1.0, 0.0, r) == 1.0, "expected 1 at gamma = 0");
    });
    add_case(cases, "attractiveness vanishes at extreme absorption", [] {
        check(fa_attractiveness(1.0, 1e6, 1.0) < 1e-300, "expected underflow toward 0");
    });
    add_case(cases, "fireflies are static without attraction or noise", [] {
        const Bounds box = Bounds::cube(2, -10.0, 10.0);
        std::vector<SolutionVector> positions{{1.0, 2.0}, {-3.0, 4.0}};
        const std::vector<SolutionVector> before = positions;
        RngStream rng(53);
        fa_move(positions, {1.0, 2.0}, {.alpha = 0.0, .beta = 0.0, .gamma = 0.01}, box, rng);
        check(positions == before, "population moved with alpha = beta = 0");
    });
    add_case(cases, "full-strength attraction lands on the brighter firefly", [] {
        const Bounds box = Bounds::cube(2, -10.0, 10.0);
        std::vector<SolutionVector> positions{{1.0, 2.0}, {-3.0, 4.0}};
        RngStream rng(59);
        // values: firefly 0 is brighter (lower), so firefly 1 moves onto it.
        fa_move(positions, {0.0, 1.0}, {.alpha = 0.0, .beta = 1.0, .gamma = 0.0}, box, rng);
        check(positions[0] == SolutionVector{1.0, 2.0}, "brighter firefly moved");
        check_close(positions[1][0], 1.0, kRel, "landing x");
        check_close(positions[1][1], 2.0, kRel, "landing y");
    });
    add_case(cases, "movement vanishes at extreme absorption", [] {
        const Bounds box = Bounds::cube(2, -10.0, 10.0);
        std::vector<SolutionVector> positions{{0.0, 0.0}, {1.0, 0.0}};
        const std::vector<SolutionVector> before = positions;
        RngStream rng(61);
        fa_move(positions, {0.0, 1.0}, {.alpha = 0.0, .beta = 1.0, .gamma = 1e6}, box, rng);
        double displacement = 0.0;
        for (std::size_t i = 0; i < positions.size(); ++i)
            for (std::size_t d = 0; d < 2; ++d)
                displacement += std::abs(positions[i][d] - before[i][d]);
        check(displacement <= 1e-6, "population moved " + format_double(displacement));
    });

    // -- benchmark functions -------------------------------------------------
    add_case(cases, "banana floor at its optimum", [] {
        check(rosenbrock_log(1.0, 1.0) == 0.0, "expected exactly 0 at (1,1)");
    });
    add_case(cases, "banana at the origin", [] {
        check_close(rosenbrock_log(0.0, 0.0), std::log(2.0), kRel, "ln 2");
    });
    add_case(cases, "banana on the parabola", [] {
        check_close(rosenbrock_log(2.0, 4.0), std::log(2.0), kRel, "ln 2");
    });
    add_case(cases, "ridge benchmark matches its published optimum", [] {
        const double v = michalewicz2(2.20319, 1.57049);
        check(std::abs(v - (-1.801)) <= 5e-3,
              "value " + format_double(v) + " not within 5e-3 of -1.801");
    });
    add_case(cases, "ridge benchmark at the origin", [] {
        check(michalewicz2(0.0, 0.0) == 0.0, "expected 0 at the origin");
    });
    add_case(cases, "ridge benchmark at the far corner", [] {
        check(std::abs(michalewicz2(std::numbers::pi, std::numbers::pi)) <= 1e-9,
              "expected 0 within 1e-9");
    });
    add_case(cases, "sphere at the origin", [] {
        check(sphere({0.0, 0.0}) == 0.0, "expected 0");
    });
    add_case(cases, "sphere of a 3-4 right triangle", [] {
        check(sphere({3.0, 4.0}) == 25.0, "expected 25");
    });
    add_case(cases, "sphere is nonnegative", [] {
        RngStream rng(67);
        const Bounds box = Bounds::cube(2, -10.0, 10.0);
        for (int i = 0; i < 100; ++i)
            check(sphere(uniform_point(box, rng)) >= 0.0, "negative sphere value");
    });
    add_case(cases, "benchmark registry verifies its entries", [] {
        const auto names = BenchmarkRegistry::builtin().names();
        check(names == std::vector<std::string>{"michalewicz2", "rosenbrock_log", "sphere"},
              "unexpected registry contents");
        for (const auto& name : names) BenchmarkRegistry::builtin().get(name).verify();
    });

    // -- pitch space ---------------------------------------------------------
    add_case(cases, "A4 pitch number", [] {
        check_close(freq_to_pitch(440.0), 69.0, kRel, "pitch of 440 Hz");
    });
    add_case(cases, "octave above A4", [] {
        check_close(freq_to_pitch(880.0), 81.0, kRel, "pitch of 880 Hz");
    });
    add_case(cases, "two octaves below A4", [] {
        check_close(freq_to_pitch(110.0), 45.0, kRel, "pitch of 110 Hz");
    });
    add_case(cases, "pitch 69 frequency", [] {
        check_close(pitch_to_freq(69.0), 440.0, kRel, "frequency of pitch 69");
    });
    add_case(cases, "pitch 81 frequency", [] {
        check_close(pitch_to_freq(81.0), 880.0, kRel, "frequency of pitch 81");
    });
    add_case(cases, "pitch-frequency roundtrip", [] {
        for (double f : {55.0, 261.63, 1000.0})
            check_close(pitch_to_freq(freq_to_pitch(f)), f, 1e-9, "roundtrip");
    });
    add_case(cases, "A4 wavelength at room temperature", [] {
        check(std::abs(wavelength(440.0, 20.0) - 0.7795) <= 1e-3,
              "expected about 0.7795 m");
    });
    add_case(cases, "wavelength at the matching speed", [] {
        check_close(wavelength(343.0, 20.0), 1.0, kRel, "one meter");
    });
    add_case(cases, "wavelength at freezing", [] {
        check_close(wavelength(440.0, 0.0), 331.0 / 440.0, kRel, "331/440");
    });

    // -- harness -------------------------------------------------------------
    add_case(cases, "degenerate budget summarizes the initial memory", [] {
        RunConfig config;
        config.algorithm = Algorithm::hs;
        config.benchmark = "sphere";
        config.params = HsParams{.hms = 5};
        config.seeds = {3};
        config.budget = {Budget::Unit::iterations, 0};
        const ExperimentOutput output = run_experiment(config);
        check(output.summary.n_runs == 1, "expected one completed run");
        check(output.traces.front().size() == 1, "expected the init record only");
        const RunOutput direct =
            run_hs(BenchmarkRegistry::builtin().get("sphere").objective(),
                   {.hms = 5, .max_iterations = 0}, 3);
        check(output.outcomes.front().result.best.value == direct.result.best.value,
              "summary disagrees with a direct run");
    });
    add_case(cases, "trace rendering is reproducible", [] {
        const RunOutput run = run_hs(sphere_objective(), {.hms = 5, .max_iterations = 20}, 7);
        const std::string a = render_trace(run.trace, TraceFormat::csv, 2);
        const std::string b = render_trace(run.trace, TraceFormat::csv, 2);
        check(a == b, "two renders differ");
        check(render_trace(run.trace, TraceFormat::jsonl, 2) ==
                  render_trace(run.trace, TraceFormat::jsonl, 2),
              "two jsonl renders differ");
    });
    add_case(cases, "empty trace renders as its header", [] {
        check(render_trace({}, TraceFormat::csv, 2) ==
                  "iteration,eval_count,best_value,best_point_0,best_point_1,"
                  "candidate_point_0,candidate_point_1,accepted\n",
              "unexpected header line");
    });
    add_case(cases, "trace line and column counts", [] {
        Trace trace(3);
        for (std::size_t i = 0; i < 3; ++i) {
            trace[i].iteration = static_cast<std::int64_t>(i);
            trace[i].eval_count = static_cast<std::int64_t>(i + 1);
            trace[i].best_point = {0.0, 0.0};
            trace[i].candidate_point = {0.0, 0.0};
        }
        const std::string text = render_trace(trace, TraceFormat::csv, 2);
        std::size_t lines = 0;
        std::size_t commas_first_line = 0;
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (text[i] == '\n') ++lines;
            if (lines == 0 && text[i] == ',') ++commas_first_line;
        }
        check(lines == 4, "expected 4 lines");
        check(commas_first_line + 1 == 2 * 2 + 4, "expected 2d+4 columns");
    });
    add_case(cases, "config round-trip preserves every field", [] {
        RunConfig config;
        config.algorithm = Algorithm::ga;
        config.benchmark = "rosenbrock_log";
        config.params = GaParams{.pop_size = 30,
                                 .p_c = 0.8,
                                 .p_m = 0.1,
                                 .mutation_scale = {0.3, 0.3},
                                 .elite_count = 2};
        config.seeds = {1, 2, 3};
        config.budget = {Budget::Unit::evaluations, 5000};
        config.output_dir = "out";
        config.trace_detail = TraceDetail::summary;
        config.trace_format = TraceFormat::jsonl;
        config.success_threshold = 0.1;
        check(parse_run_config(serialize_run_config(config)) == config,
              "round-trip changed the config");
    });
    add_case(cases, "single config comparison has one row", [] {
        RunConfig config;
        config.algorithm = Algorithm::hs;
        config.benchmark = "sphere";
        config.params = HsParams{.hms = 5};
        config.seeds = {1};
        config.budget = {Budget::Unit::evaluations, 50};
        const Comparison comparison = compare_algorithms({config});
        check(comparison.rows.size() == 1, "expected one row");
        check(comparison.budget_evals == 50, "budget echo mismatch");
    });
    add_case(cases, "comparison rows sort by algorithm name", [] {
        RunConfig hs;
        hs.algorithm = Algorithm::hs;
        hs.benchmark = "sphere";
        hs.params = HsParams{.hms = 5};
        hs.seeds = {1};
        hs.budget = {Budget::Unit::evaluations, 60};
        RunConfig sa;
        sa.algorithm = Algorithm::sa;
        sa.benchmark = "sphere";
        sa.params = SaParams{};
        sa.seeds = {1};
        sa.budget = {Budget::Unit::evaluations, 60};
        const Comparison comparison = compare_algorithms({sa, hs});
        check(comparison.rows.size() == 2, "expected two rows");
        check(comparison.rows[0].algorithm == Algorithm::hs &&
                  comparison.rows[1].algorithm == Algorithm::sa,
              "rows not sorted by name");
    });

    return cases;
}

bool run_selftest(std::ostream& out) {
    const std::vector<SelfTestCase> cases = selftest_cases();
    std::size_t passed = 0;
    for (const auto& test : cases) {
        if (test.passed) {
            ++passed;
            out << "PASS " << test.name << "\n";
        } else {
            out << "FAIL " << test.name << ": " << test.detail << "\n";
        }
    }
    out << "selftest: " << passed << "/" << cases.size() << " cases passed\n";
    return passed == cases.size();
}

}  // namespace harmonium
