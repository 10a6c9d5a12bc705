#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "harmonium/objective.hpp"
#include "harmonium/rng.hpp"
#include "harmonium/run.hpp"

namespace harmonium {

// Particle swarm optimization in its plain form: no inertia weight, no
// constriction, no velocity limit. Positions are clamped to bounds.
struct PsoParams {
    int swarm_size = 20;
    double alpha = 0.5;  // pull toward the global best
    double beta = 0.5;   // pull toward the particle's own best
    std::int64_t max_iterations = 0;

    void validate() const;
    bool operator==(const PsoParams&) const = default;
};

std::string echo_params(const PsoParams& params);

// One particle update:
//   v' = v + alpha * e1 o (global_best - x) + beta * e2 o (personal_best - x)
//   x' = clamp(x + v')
// e1 and e2 are fresh uniform [0,1) vectors drawn component-wise (e1 then e2
// per dimension). Returns (position', velocity').
std::pair<SolutionVector, SolutionVector> pso_update(const SolutionVector& position,
                                                     const SolutionVector& velocity,
                                                     const SolutionVector& personal_best,
                                                     const SolutionVector& global_best,
                                                     const PsoParams& params, const Bounds& bounds,
                                                     RngStream& rng);

// Full run: swarm initialized uniformly in bounds with zero velocity;
// per iteration each particle updates, is evaluated, and personal/global
// bests update on strict improvement. Total evaluations are exactly
// swarm_size * (1 + max_iterations).
RunOutput run_pso(const ObjectiveFunction& objective, const PsoParams& params, std::uint64_t seed);

}  // namespace harmonium
