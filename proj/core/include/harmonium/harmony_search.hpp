#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "harmonium/objective.hpp"
#include "harmonium/rng.hpp"
#include "harmonium/run.hpp"

namespace harmonium {

// Harmony Search tuning knobs.
//
// Per decision variable, improvisation draws from memory with probability
// r_accept (then perturbs within +-b_range with probability r_pa) and
// randomizes over the domain otherwise. An empty b_range resolves to
// 0.03 * (upper - lower) per dimension at run start.
struct HsParams {
    int hms = 20;                   // harmony memory size
    double r_accept = 0.95;         // memory considering rate
    double r_pa = 0.7;              // pitch adjusting rate
    std::vector<double> b_range;    // pitch bandwidth per dimension, problem units
    std::int64_t max_iterations = 0;

    void validate(std::size_t dims) const;
    bool operator==(const HsParams&) const = default;
};

// Fills b_range with the default rule when empty and validates against dims.
HsParams resolve_hs_defaults(HsParams params, const Bounds& bounds);

// JSON text of a fully materialized parameter set.
std::string echo_params(const HsParams& params);

// Branch probabilities of one improvisation decision:
//   p_random = 1 - r_accept, p_pitch = r_accept * r_pa,
//   p_memory_only = r_accept * (1 - r_pa). They sum to 1.
struct BranchProbabilities {
    double memory_only = 0.0;
    double pitch = 0.0;
    double random = 0.0;
};
BranchProbabilities branch_probabilities(const HsParams& params);

// Linear pitch adjustment: x_old + b_range_i * epsilon, epsilon in [-1,1].
// Clamping is the caller's job.
double pitch_adjust(double x_old, double b_range_i, double epsilon);

// Fixed-size pool of evaluated solutions with tracked best/worst members.
class HarmonyMemory {
public:
    explicit HarmonyMemory(std::vector<EvaluatedSolution> members);

    std::size_t size() const { return members_.size(); }
    const EvaluatedSolution& member(std::size_t i) const { return members_[i]; }
    const std::vector<EvaluatedSolution>& members() const { return members_; }

    std::size_t best_index() const { return best_; }
    std::size_t worst_index() const { return worst_; }
    const EvaluatedSolution& best() const { return members_[best_]; }
    const EvaluatedSolution& worst() const { return members_[worst_]; }

    // Replaces the worst member when the candidate strictly improves on it
    // (ties leave the memory unchanged). Returns whether it was accepted.
    // The best value never worsens.
    bool consider(EvaluatedSolution candidate);

private:
    void reindex();

    std::vector<EvaluatedSolution> members_;
    std::size_t best_ = 0;
    std::size_t worst_ = 0;
};

// hms independent uniform points in bounds, each evaluated exactly once.
HarmonyMemory init_memory(EvalCounter& counter, const HsParams& params, RngStream& rng);

// Per-branch counters for improvisation decisions, one count per decision
// variable per call. Pass to improvise to measure empirical branch rates.
struct BranchTally {
    std::int64_t memory_only = 0;
    std::int64_t pitch = 0;
    std::int64_t random = 0;
    std::int64_t total() const { return memory_only + pitch + random; }
};

// Improvises one candidate: per decision variable independently, draw from a
// uniformly chosen memory member with probability r_accept (then pitch-adjust
// with probability r_pa, epsilon uniform in [-1,1]), else draw uniform over
// the domain. The result is clamped to bounds. Requires resolved b_range.
SolutionVector improvise(const HarmonyMemory& memory, const HsParams& params,
                         const Bounds& bounds, RngStream& rng, BranchTally* tally = nullptr);

// Full run: memory initialization plus max_iterations improvise/evaluate/
// consider cycles. Total evaluations are exactly hms + max_iterations.
RunOutput run_hs(const ObjectiveFunction& objective, const HsParams& params, std::uint64_t seed);

}  // namespace harmonium
