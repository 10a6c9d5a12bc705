#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "harmonium/objective.hpp"
#include "harmonium/rng.hpp"
#include "harmonium/run.hpp"

namespace harmonium {

// Firefly algorithm: each firefly moves toward every brighter (lower
// objective) one with distance-decayed attractiveness plus a uniform random
// walk. Brightness is the negated objective value; the attractiveness term
// carries all distance decay.
struct FaParams {
    int pop_size = 25;
    double alpha = 0.05;  // random-walk scale, problem units
    double beta = 1.0;    // attractiveness at zero distance
    double gamma = 0.01;  // light absorption coefficient
    std::int64_t max_iterations = 0;

    void validate() const;
    bool operator==(const FaParams&) const = default;
};

std::string echo_params(const FaParams& params);

// beta * exp(-gamma * r^2): beta at r = 0, monotone decreasing in r for
// gamma > 0. Underflows to 0 for huge gamma * r^2.
double fa_attractiveness(double beta, double gamma, double r);

// One iteration of moves. For each firefly i (in index order), for each j
// with values[j] < values[i]: displace i by
//   fa_attractiveness(beta, gamma, |x_i - x_j|) * (x_j - x_i) + alpha * e1
// where e1 is a fresh uniform [-0.5,0.5) vector per move and distances use
// current positions (earlier moves in the same iteration are visible).
// Each firefly is clamped after its moves. values is the brightness snapshot
// taken before any move; positions are updated in place.
void fa_move(std::vector<SolutionVector>& positions, const std::vector<double>& values,
             const FaParams& params, const Bounds& bounds, RngStream& rng);

// Full run. Total evaluations are exactly pop_size * (1 + max_iterations).
RunOutput run_fa(const ObjectiveFunction& objective, const FaParams& params, std::uint64_t seed);

}  // namespace harmonium
