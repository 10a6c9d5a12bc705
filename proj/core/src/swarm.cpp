#include "harmonium/swarm.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "harmonium/text.hpp"

namespace harmonium {

void PsoParams::validate() const {
    if (swarm_size < 1) throw std::invalid_argument("pso: swarm_size must be at least 1");
    if (!(alpha >= 0.0) || !std::isfinite(alpha))
        throw std::invalid_argument("pso: alpha must be nonnegative and finite");
    if (!(beta >= 0.0) || !std::isfinite(beta))
        throw std::invalid_argument("pso: beta must be nonnegative and finite");
    if (max_iterations < 0) throw std::invalid_argument("pso: max_iterations must be nonnegative");
}

std::string echo_params(const PsoParams& params) {
    return "{\"algorithm\":\"pso\",\"swarm_size\":" + format_int(params.swarm_size) +
           ",\"alpha\":" + format_double(params.alpha) +
           ",\"beta\":" + format_double(params.beta) +
           ",\"max_iterations\":" + format_int(params.max_iterations) + "}";
}

std::pair<SolutionVector, SolutionVector> pso_update(const SolutionVector& position,
                                                     const SolutionVector& velocity,
                                                     const SolutionVector& personal_best,
                                                     const SolutionVector& global_best,
                                                     const PsoParams& params, const Bounds& bounds,
                                                     RngStream& rng) {
    if (position.size() != bounds.dims() || velocity.size() != bounds.dims() ||
        personal_best.size() != bounds.dims() || global_best.size() != bounds.dims())
        throw std::invalid_argument("pso_update: dimension mismatch");

    SolutionVector new_velocity(position.size());
    SolutionVector new_position(position.size());
    for (std::size_t i = 0; i < position.size(); ++i) {
        const double e1 = rng.next_double();
        const double e2 = rng.next_double();
        new_velocity[i] = velocity[i] + params.alpha * e1 * (global_best[i] - position[i]) +
                          params.beta * e2 * (personal_best[i] - position[i]);
        new_position[i] = std::clamp(position[i] + new_velocity[i], bounds.lower(i),
                                     bounds.upper(i));
    }
    return {std::move(new_position), std::move(new_velocity)};
}

RunOutput run_pso(const ObjectiveFunction& objective, const PsoParams& params,
                  std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    params.validate();

    EvalCounter counter(objective);
    RngStream rng(seed);
    const Bounds& bounds = objective.bounds;
    const std::size_t n = static_cast<std::size_t>(params.swarm_size);

    std::vector<SolutionVector> positions(n);
    std::vector<SolutionVector> velocities(n, SolutionVector(bounds.dims(), 0.0));
    std::vector<EvaluatedSolution> personal_bests;
    personal_bests.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        positions[i] = uniform_point(bounds, rng);
        personal_bests.push_back(counter.evaluate(positions[i]));
    }

    std::size_t global = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (personal_bests[i].value < personal_bests[global].value) global = i;
    EvaluatedSolution global_best = personal_bests[global];

    Trace trace;
    trace.reserve(static_cast<std::size_t>(params.max_iterations) + 1);
    trace.push_back(TraceRecord{0, counter.count(), global_best.value, global_best.point,
                                global_best.point, true});

    for (std::int64_t t = 1; t <= params.max_iterations; ++t) {
        // Synchronous update: every particle sees the global best of the
        // previous iteration.
        const SolutionVector global_snapshot = global_best.point;
        EvaluatedSolution iteration_best;  // best of this iteration's new evaluations
        bool have_iteration_best = false;

        for (std::size_t i = 0; i < n; ++i) {
            auto [new_position, new_velocity] =
                pso_update(positions[i], velocities[i], personal_bests[i].point, global_snapshot,
                           params, bounds, rng);
            positions[i] = std::move(new_position);
            velocities[i] = std::move(new_velocity);

            EvaluatedSolution evaluated = counter.evaluate(positions[i]);
            if (!have_iteration_best || evaluated.value < iteration_best.value) {
                iteration_best = evaluated;
                have_iteration_best = true;
            }
            if (evaluated.value < personal_bests[i].value) personal_bests[i] = std::move(evaluated);
        }

        bool improved = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (personal_bests[i].value < global_best.value) {
                global_best = personal_bests[i];
                improved = true;
            }
        }

        trace.push_back(TraceRecord{t, counter.count(), global_best.value, global_best.point,
                                    have_iteration_best ? iteration_best.point : global_best.point,
                                    improved});
    }

    const auto stop = std::chrono::steady_clock::now();
    RunOutput out;
    out.result = RunResult{
        .best = std::move(global_best),
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
