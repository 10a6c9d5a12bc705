#include "harmonium/annealing.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "harmonium/text.hpp"

namespace harmonium {

void SaParams::validate(std::size_t dims) const {
    if (!(t0 > 0.0)) throw std::invalid_argument("sa: t0 must be positive");
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("sa: alpha must lie in (0, 1)");
    if (!(k > 0.0)) throw std::invalid_argument("sa: k must be positive");
    if (step_size.size() != dims)
        throw std::invalid_argument("sa: step_size must have one entry per dimension");
    for (const double s : step_size) {
        if (!(s > 0.0) || !std::isfinite(s))
            throw std::invalid_argument("sa: step_size entries must be positive and finite");
    }
    if (max_iterations < 0) throw std::invalid_argument("sa: max_iterations must be nonnegative");
}

SaParams resolve_sa_defaults(SaParams params, const Bounds& bounds) {
    if (params.step_size.empty()) {
        params.step_size.resize(bounds.dims());
        for (std::size_t i = 0; i < bounds.dims(); ++i)
            params.step_size[i] = 0.1 * bounds.width(i);
    }
    return params;
}

std::string echo_params(const SaParams& params) {
    std::string out = "{\"algorithm\":\"sa\",\"t0\":" + format_double(params.t0) +
                      ",\"alpha\":" + format_double(params.alpha) +
                      ",\"k\":" + format_double(params.k) + ",\"step_size\":[";
    for (std::size_t i = 0; i < params.step_size.size(); ++i) {
        if (i != 0) out += ',';
        out += format_double(params.step_size[i]);
    }
    out += "],\"max_iterations\":" + format_int(params.max_iterations) + "}";
    return out;
}

double sa_accept_probability(double delta_e, double temperature, double k) {
    if (!(temperature > 0.0)) throw std::invalid_argument("sa: temperature must be positive");
    if (!(k > 0.0)) throw std::invalid_argument("sa: k must be positive");
    if (delta_e <= 0.0) return 1.0;
    return std::exp(-delta_e / (k * temperature));
}

double geometric_cooling(double t0, double alpha, std::int64_t t) {
    return t0 * std::pow(alpha, static_cast<double>(t));
}

RunOutput run_sa(const ObjectiveFunction& objective, const SaParams& raw_params,
                 std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    const SaParams params = resolve_sa_defaults(raw_params, objective.bounds);
    params.validate(objective.bounds.dims());

    EvalCounter counter(objective);
    RngStream rng(seed);
    const Bounds& bounds = objective.bounds;

    EvaluatedSolution current = counter.evaluate(uniform_point(bounds, rng));
    EvaluatedSolution best = current;

    Trace trace;
    trace.reserve(static_cast<std::size_t>(params.max_iterations) + 1);
    trace.push_back(TraceRecord{0, counter.count(), best.value, best.point, current.point, true});

    for (std::int64_t t = 1; t <= params.max_iterations; ++t) {
        const double temperature = geometric_cooling(params.t0, params.alpha, t);

        SolutionVector proposal_point(bounds.dims());
        for (std::size_t i = 0; i < bounds.dims(); ++i) {
            proposal_point[i] = std::clamp(current.point[i] + params.step_size[i] * rng.gaussian(),
                                           bounds.lower(i), bounds.upper(i));
        }
        EvaluatedSolution proposal = counter.evaluate(std::move(proposal_point));

        const double delta_e = proposal.value - current.value;
        bool accepted = delta_e <= 0.0;
        if (!accepted)
            accepted = rng.next_double() < sa_accept_probability(delta_e, temperature, params.k);

        SolutionVector candidate_copy = proposal.point;
        if (accepted) current = std::move(proposal);
        if (current.value < best.value) best = current;

        trace.push_back(TraceRecord{t, counter.count(), best.value, best.point,
                                    std::move(candidate_copy), accepted});
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
