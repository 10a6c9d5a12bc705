#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "harmonium/objective.hpp"
#include "harmonium/run.hpp"

namespace harmonium {

// Simulated annealing with a geometric cooling schedule and an isotropic
// Gaussian proposal scaled per dimension. An empty step_size resolves to
// 0.1 * (upper - lower) per dimension at run start.
struct SaParams {
    double t0 = 1.0;                // initial temperature
    double alpha = 0.9995;          // geometric cooling factor in (0,1)
    double k = 1.0;                 // Boltzmann constant
    std::vector<double> step_size;  // proposal scale per dimension, problem units
    std::int64_t max_iterations = 0;

    void validate(std::size_t dims) const;
    bool operator==(const SaParams&) const = default;
};

SaParams resolve_sa_defaults(SaParams params, const Bounds& bounds);
std::string echo_params(const SaParams& params);

// Metropolis acceptance probability exp(-delta_e / (k * temperature));
// improving moves (delta_e <= 0) are always accepted. Throws when
// temperature or k is not positive.
double sa_accept_probability(double delta_e, double temperature, double k = 1.0);

// T(t) = t0 * alpha^t. Strictly decreasing in t for alpha in (0,1).
double geometric_cooling(double t0, double alpha, std::int64_t t);

// Single-agent Markov chain: Gaussian proposal, Metropolis acceptance at the
// cooled temperature, clamped to bounds. The trace tracks the best value ever
// evaluated, which stays monotone even when the chain accepts worse states.
// Total evaluations are exactly 1 + max_iterations.
RunOutput run_sa(const ObjectiveFunction& objective, const SaParams& params, std::uint64_t seed);

}  // namespace harmonium
