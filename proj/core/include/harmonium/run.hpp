#pragma once

#include <cstdint>
#include <string>

#include "harmonium/objective.hpp"
#include "harmonium/trace.hpp"

namespace harmonium {

// Outcome of one seeded run. params_echo holds the fully materialized
// parameter set as JSON text, defaults included, so a result is
// self-describing without the config that produced it.
struct RunResult {
    EvaluatedSolution best;
    std::int64_t eval_count = 0;
    std::uint64_t seed = 0;
    std::int64_t wall_time_ms = 0;
    std::string params_echo;
};

struct RunOutput {
    RunResult result;
    Trace trace;
};

}  // namespace harmonium
