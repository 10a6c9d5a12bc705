#pragma once

#include <cstdint>
#include <vector>

#include "harmonium/bounds.hpp"

namespace harmonium {

// One snapshot per iteration of an optimization run. Every runner emits a
// record at iteration 0 (state after initialization) and one per iteration
// after that, so eval_count is strictly increasing and best_value is
// non-increasing across a trace (minimization, elitist best tracking).
//
// candidate_point is the solution proposed this iteration: the improvised
// harmony (HS), the proposal (SA), or the best newly evaluated point of the
// iteration (GA/PSO/FA). accepted means the proposal entered the algorithm's
// state (memory replacement, chain acceptance) or, for population methods,
// that the best-so-far improved. At iteration 0 the candidate is the initial
// best.
struct TraceRecord {
    std::int64_t iteration = 0;
    std::int64_t eval_count = 0;
    double best_value = 0.0;
    SolutionVector best_point;
    SolutionVector candidate_point;
    bool accepted = false;

    bool operator==(const TraceRecord&) const = default;
};

using Trace = std::vector<TraceRecord>;

}  // namespace harmonium
