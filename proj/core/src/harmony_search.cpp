#include "harmonium/harmony_search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "harmonium/text.hpp"

namespace harmonium {

void HsParams::validate(std::size_t dims) const {
    if (hms < 1) throw std::invalid_argument("hs: hms must be at least 1");
    if (!(r_accept >= 0.0 && r_accept <= 1.0))
        throw std::invalid_argument("hs: r_accept must lie in [0, 1]");
    if (!(r_pa >= 0.0 && r_pa <= 1.0))
        throw std::invalid_argument("hs: r_pa must lie in [0, 1]");
    if (b_range.size() != dims)
        throw std::invalid_argument("hs: b_range must have one entry per dimension");
    for (const double b : b_range) {
        if (!(b > 0.0) || !std::isfinite(b))
            throw std::invalid_argument("hs: b_range entries must be positive and finite");
    }
    if (max_iterations < 0) throw std::invalid_argument("hs: max_iterations must be nonnegative");
}

HsParams resolve_hs_defaults(HsParams params, const Bounds& bounds) {
    if (params.b_range.empty()) {
        params.b_range.resize(bounds.dims());
        for (std::size_t i = 0; i < bounds.dims(); ++i)
            params.b_range[i] = 0.03 * bounds.width(i);
    }
    return params;
}

std::string echo_params(const HsParams& params) {
    std::string out = "{\"algorithm\":\"hs\",\"hms\":" + format_int(params.hms) +
                      ",\"r_accept\":" + format_double(params.r_accept) +
                      ",\"r_pa\":" + format_double(params.r_pa) + ",\"b_range\":[";
    for (std::size_t i = 0; i < params.b_range.size(); ++i) {
        if (i != 0) out += ',';
        out += format_double(params.b_range[i]);
    }
    out += "],\"max_iterations\":" + format_int(params.max_iterations) + "}";
    return out;
}

BranchProbabilities branch_probabilities(const HsParams& params) {
    return BranchProbabilities{
        .memory_only = params.r_accept * (1.0 - params.r_pa),
        .pitch = params.r_accept * params.r_pa,
        .random = 1.0 - params.r_accept,
    };
}

double pitch_adjust(double x_old, double b_range_i, double epsilon) {
    return x_old + b_range_i * epsilon;
}

HarmonyMemory::HarmonyMemory(std::vector<EvaluatedSolution> members)
    : members_(std::move(members)) {
    if (members_.empty()) throw std::invalid_argument("HarmonyMemory: must not be empty");
    reindex();
}

void HarmonyMemory::reindex() {
    best_ = 0;
    worst_ = 0;
    for (std::size_t i = 1; i < members_.size(); ++i) {
        if (members_[i].value < members_[best_].value) best_ = i;
        if (members_[i].value > members_[worst_].value) worst_ = i;
    }
}

bool HarmonyMemory::consider(EvaluatedSolution candidate) {
    // Strict improvement only; a tie leaves the memory unchanged.
    if (!(candidate.value < members_[worst_].value)) return false;
    members_[worst_] = std::move(candidate);
    reindex();
    return true;
}

HarmonyMemory init_memory(EvalCounter& counter, const HsParams& params, RngStream& rng) {
    std::vector<EvaluatedSolution> members;
    members.reserve(static_cast<std::size_t>(params.hms));
    for (int i = 0; i < params.hms; ++i)
        members.push_back(counter.evaluate(uniform_point(counter.bounds(), rng)));
    return HarmonyMemory(std::move(members));
}

SolutionVector improvise(const HarmonyMemory& memory, const HsParams& params,
                         const Bounds& bounds, RngStream& rng, BranchTally* tally) {
    SolutionVector candidate(bounds.dims());
    for (std::size_t i = 0; i < bounds.dims(); ++i) {
        if (rng.next_double() < params.r_accept) {
            const std::size_t pick = rng.uniform_int(memory.size());
            double value = memory.member(pick).point[i];
            if (rng.next_double() < params.r_pa) {
                value = pitch_adjust(value, params.b_range[i], rng.symmetric());
                value = std::clamp(value, bounds.lower(i), bounds.upper(i));
                if (tally) ++tally->pitch;
            } else {
                if (tally) ++tally->memory_only;
            }
            candidate[i] = value;
        } else {
            candidate[i] = rng.uniform(bounds.lower(i), bounds.upper(i));
            if (tally) ++tally->random;
        }
    }
    return candidate;
}

RunOutput run_hs(const ObjectiveFunction& objective, const HsParams& raw_params,
                 std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    const HsParams params = resolve_hs_defaults(raw_params, objective.bounds);
    params.validate(objective.bounds.dims());

    EvalCounter counter(objective);
    RngStream rng(seed);
    HarmonyMemory memory = init_memory(counter, params, rng);

    Trace trace;
    trace.reserve(static_cast<std::size_t>(params.max_iterations) + 1);
    trace.push_back(TraceRecord{0, counter.count(), memory.best().value, memory.best().point,
                                memory.best().point, true});

    for (std::int64_t t = 1; t <= params.max_iterations; ++t) {
        SolutionVector candidate = improvise(memory, params, objective.bounds, rng);
        EvaluatedSolution evaluated = counter.evaluate(std::move(candidate));
        SolutionVector candidate_copy = evaluated.point;
        const bool accepted = memory.consider(std::move(evaluated));
        trace.push_back(TraceRecord{t, counter.count(), memory.best().value, memory.best().point,
                                    std::move(candidate_copy), accepted});
    }

    const auto stop = std::chrono::steady_clock::now();
    RunOutput out;
    out.result = RunResult{
        .best = memory.best(),
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
