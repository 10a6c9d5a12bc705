#include "harmonium/firefly.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "harmonium/text.hpp"

namespace harmonium {

void FaParams::validate() const {
    if (pop_size < 1) throw std::invalid_argument("fa: pop_size must be at least 1");
    if (!(alpha >= 0.0) || !std::isfinite(alpha))
        throw std::invalid_argument("fa: alpha must be nonnegative and finite");
    if (!(beta >= 0.0) || !std::isfinite(beta))
        throw std::invalid_argument("fa: beta must be nonnegative and finite");
    if (!(gamma >= 0.0) || !std::isfinite(gamma))
        throw std::invalid_argument("fa: gamma must be nonnegative and finite");
    if (max_iterations < 0) throw std::invalid_argument("fa: max_iterations must be nonnegative");
}

std::string echo_params(const FaParams& params) {
    return "{\"algorithm\":\"fa\",\"pop_size\":" + format_int(params.pop_size) +
           ",\"alpha\":" + format_double(params.alpha) +
           ",\"beta\":" + format_double(params.beta) +
           ",\"gamma\":" + format_double(params.gamma) +
           ",\"max_iterations\":" + format_int(params.max_iterations) + "}";
}

double fa_attractiveness(double beta, double gamma, double r) {
    return beta * std::exp(-gamma * r * r);
}

void fa_move(std::vector<SolutionVector>& positions, const std::vector<double>& values,
             const FaParams& params, const Bounds& bounds, RngStream& rng) {
    if (positions.size() != values.size())
        throw std::invalid_argument("fa_move: positions and values must have equal length");

    for (std::size_t i = 0; i < positions.size(); ++i) {
        for (std::size_t j = 0; j < positions.size(); ++j) {
            if (!(values[j] < values[i])) continue;

            double r2 = 0.0;
            for (std::size_t d = 0; d < bounds.dims(); ++d) {
                const double diff = positions[i][d] - positions[j][d];
                r2 += diff * diff;
            }
            const double attr = fa_attractiveness(params.beta, params.gamma, std::sqrt(r2));

            for (std::size_t d = 0; d < bounds.dims(); ++d) {
                const double e1 = rng.next_double() - 0.5;
                positions[i][d] += attr * (positions[j][d] - positions[i][d]) + params.alpha * e1;
            }
        }
        positions[i] = clamp(positions[i], bounds);
    }
}

RunOutput run_fa(const ObjectiveFunction& objective, const FaParams& params, std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    params.validate();

    EvalCounter counter(objective);
    RngStream rng(seed);
    const Bounds& bounds = objective.bounds;
    const std::size_t n = static_cast<std::size_t>(params.pop_size);

    std::vector<SolutionVector> positions(n);
    std::vector<double> values(n);
    EvaluatedSolution best;
    for (std::size_t i = 0; i < n; ++i) {
        positions[i] = uniform_point(bounds, rng);
        EvaluatedSolution evaluated = counter.evaluate(positions[i]);
        values[i] = evaluated.value;
        if (i == 0 || evaluated.value < best.value) best = std::move(evaluated);
    }

    Trace trace;
    trace.reserve(static_cast<std::size_t>(params.max_iterations) + 1);
    trace.push_back(TraceRecord{0, counter.count(), best.value, best.point, best.point, true});

    for (std::int64_t t = 1; t <= params.max_iterations; ++t) {
        // Brightness snapshot drives the whole iteration even though
        // positions move in place.
        const std::vector<double> snapshot = values;
        fa_move(positions, snapshot, params, bounds, rng);

        EvaluatedSolution iteration_best;
        bool have_iteration_best = false;
        for (std::size_t i = 0; i < n; ++i) {
            EvaluatedSolution evaluated = counter.evaluate(positions[i]);
            values[i] = evaluated.value;
            if (!have_iteration_best || evaluated.value < iteration_best.value) {
                iteration_best = std::move(evaluated);
                have_iteration_best = true;
            }
        }

        bool improved = false;
        if (have_iteration_best && iteration_best.value < best.value) {
            best = iteration_best;
            improved = true;
        }

        trace.push_back(TraceRecord{t, counter.count(), best.value, best.point,
                                    have_iteration_best ? iteration_best.point : best.point,
                                    improved});
    }

    const auto stop = std::chrono::steady_clock::now();
    RunOutput out;
    out.result = RunResult{
        .best = std::move(best),
        .eval_count = counter.count(),
        .seed = seed,
        .wall_time_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count(),
        .params_echo = echo_params(params),
    };
    out.trace = std::move(trace);
    return out;
}

}  // namespace harmonium
