#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "harmonium/objective.hpp"
#include "harmonium/run.hpp"

namespace harmonium {

// Real-valued genetic algorithm: roulette selection on transformed objective
// values, single-point crossover, per-component Gaussian mutation, and
// elitism. An empty mutation_scale resolves to 0.05 * (upper - lower) per
// dimension at run start.
struct GaParams {
    int pop_size = 50;
    double p_c = 0.85;                   // crossover probability
    double p_m = 0.05;                   // per-component mutation probability
    std::vector<double> mutation_scale;  // Gaussian mutation scale per dimension
    int elite_count = 2;                 // copied unmodified each generation
    std::int64_t max_generations = 0;

    void validate(std::size_t dims) const;
    bool operator==(const GaParams&) const = default;
};

GaParams resolve_ga_defaults(GaParams params, const Bounds& bounds);
std::string echo_params(const GaParams& params);

// Normalizes strictly positive fitness values to sum 1, order preserved.
// Throws when any value is not strictly positive; minimization objectives
// are transformed before this (see run_ga).
std::vector<double> relative_fitness(const std::vector<double>& values);

// Full run. Selection pressure comes from relative_fitness applied to
// fitness_i = 1 / (1 + value_i - min_pop_value), which is strictly positive
// for any objective range. Total evaluations are exactly
// pop_size + max_generations * (pop_size - elite_count).
RunOutput run_ga(const ObjectiveFunction& objective, const GaParams& params, std::uint64_t seed);

}  // namespace harmonium
