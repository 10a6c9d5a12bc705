#include "harmonium/genetic.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "harmonium/rng.hpp"
#include "harmonium/text.hpp"

namespace harmonium {

void GaParams::validate(std::size_t dims) const {
    if (pop_size < 2) throw std::invalid_argument("ga: pop_size must be at least 2");
    if (!(p_c >= 0.0 && p_c <= 1.0)) throw std::invalid_argument("ga: p_c must lie in [0, 1]");
    if (!(p_m >= 0.0 && p_m <= 1.0)) throw std::invalid_argument("ga: p_m must lie in [0, 1]");
    if (mutation_scale.size() != dims)
        throw std::invalid_argument("ga: mutation_scale must have one entry per dimension");
    for (const double s : mutation_scale) {
        if (!(s > 0.0) || !std::isfinite(s))
            throw std::invalid_argument("ga: mutation_scale entries must be positive and finite");
    }
    if (elite_count < 0 || elite_count >= pop_size)
        throw std::invalid_argument("ga: elite_count must lie in [0, pop_size)");
    if (max_generations < 0)
        throw std::invalid_argument("ga: max_generations must be nonnegative");
}

GaParams resolve_ga_defaults(GaParams params, const Bounds& bounds) {
    if (params.mutation_scale.empty()) {
        params.mutation_scale.resize(bounds.dims());
        for (std::size_t i = 0; i < bounds.dims(); ++i)
            params.mutation_scale[i] = 0.05 * bounds.width(i);
    }
    return params;
}

std::string echo_params(const GaParams& params) {
    std::string out = "{\"algorithm\":\"ga\",\"pop_size\":" + format_int(params.pop_size) +
                      ",\"p_c\":" + format_double(params.p_c) +
                      ",\"p_m\":" + format_double(params.p_m) + ",\"mutation_scale\":[";
    for (std::size_t i = 0; i < params.mutation_scale.size(); ++i) {
        if (i != 0) out += ',';
        out += format_double(params.mutation_scale[i]);
    }
    out += "],\"elite_count\":" + format_int(params.elite_count) +
           ",\"max_generations\":" + format_int(params.max_generations) + "}";
    return out;
}

std::vector<double> relative_fitness(const std::vector<double>& values) {
    if (values.empty()) throw std::invalid_argument("relative_fitness: empty input");
    double sum = 0.0;
    for (const double v : values) {
        if (!(v > 0.0) || !std::isfinite(v))
            throw std::invalid_argument("relative_fitness: values must be positive and finite");
        sum += v;
    }
    std::vector<double> out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) out[i] = values[i] / sum;
    return out;
}

namespace {

std::size_t roulette_pick(const std::vector<double>& probabilities, RngStream& rng) {
    const double u = rng.next_double();
    double cumulative = 0.0;
    for (std::size_t i = 0; i < probabilities.size(); ++i) {
        cumulative += probabilities[i];
        if (u < cumulative) return i;
    }
    return probabilities.size() - 1;  // u landed in the rounding slack
}

SolutionVector mutate(SolutionVector child, const GaParams& params, const Bounds& bounds,
                      RngStream& rng) {
    for (std::size_t i = 0; i < child.size(); ++i) {
        if (rng.next_double() < params.p_m) {
            child[i] = std::clamp(child[i] + params.mutation_scale[i] * rng.gaussian(),
                                  bounds.lower(i), bounds.upper(i));
        }
    }
    return child;
}

// Indices of the count lowest-value members, ties broken by index.
std::vector<std::size_t> elite_indices(const std::vector<EvaluatedSolution>& population,
                                       int count) {
    std::vector<std::size_t> order(population.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (population[a].value != population[b].value)
            return population[a].value < population[b].value;
        return a < b;
    });
    order.resize(static_cast<std::size_t>(count));
    return order;
}

std::size_t best_index(const std::vector<EvaluatedSolution>& population) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < population.size(); ++i)
        if (population[i].value < population[best].value) best = i;
    return best;
}

}  // namespace

RunOutput run_ga(const ObjectiveFunction& objective, const GaParams& raw_params,
                 std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    const GaParams params = resolve_ga_defaults(raw_params, objective.bounds);
    params.validate(objective.bounds.dims());

    EvalCounter counter(objective);
    RngStream rng(seed);
    const Bounds& bounds = objective.bounds;
    const std::size_t dims = bounds.dims();

    std::vector<EvaluatedSolution> population;
    population.reserve(static_cast<std::size_t>(params.pop_size));
    for (int i = 0; i < params.pop_size; ++i)
        population.push_back(counter.evaluate(uniform_point(bounds, rng)));

    // Best ever evaluated; with elitism off the population best can regress,
    // the reported best never does.
    EvaluatedSolution best_ever = population[best_index(population)];

    Trace trace;
    trace.reserve(static_cast<std::size_t>(params.max_generations) + 1);
    trace.push_back(
        TraceRecord{0, counter.count(), best_ever.value, best_ever.point, best_ever.point, true});

    for (std::int64_t g = 1; g <= params.max_generations; ++g) {
        // Selection pressure: transformed so the population minimum gets
        // fitness 1 and everything is strictly positive.
        double min_value = population[0].value;
        for (const auto& member : population) min_value = std::min(min_value, member.value);
        std::vector<double> fitness(population.size());
        for (std::size_t i = 0; i < population.size(); ++i)
            fitness[i] = 1.0 / (1.0 + population[i].value - min_value);
        const std::vector<double> probabilities = relative_fitness(fitness);

        std::vector<EvaluatedSolution> next;
        next.reserve(population.size());
        for (const std::size_t e : elite_indices(population, params.elite_count))
            next.push_back(population[e]);

        const EvaluatedSolution* generation_best = nullptr;
        const std::size_t target = population.size();
        while (next.size() < target) {
            const SolutionVector& p1 = population[roulette_pick(probabilities, rng)].point;
            const SolutionVector& p2 = population[roulette_pick(probabilities, rng)].point;

            SolutionVector c1 = p1;
            SolutionVector c2 = p2;
            if (dims > 1 && rng.next_double() < params.p_c) {
                const std::size_t cut = 1 + rng.uniform_int(dims - 1);
                for (std::size_t i = cut; i < dims; ++i) std::swap(c1[i], c2[i]);
            }

            c1 = mutate(std::move(c1), params, bounds, rng);
            c2 = mutate(std::move(c2), params, bounds, rng);

            for (SolutionVector* child : {&c1, &c2}) {
                if (next.size() >= target) break;
                next.push_back(counter.evaluate(std::move(*child)));
                const EvaluatedSolution& placed = next.back();
                if (!generation_best || placed.value < generation_best->value)
                    generation_best = &placed;
            }
        }

        population = std::move(next);
        bool improved = false;
        const EvaluatedSolution& b = population[best_index(population)];
        if (b.value < best_ever.value) {
            best_ever = b;
            improved = true;
        }
        trace.push_back(TraceRecord{g, counter.count(), best_ever.value, best_ever.point,
                                    generation_best ? generation_best->point : best_ever.point,
                                    improved});
    }

    const auto stop = std::chrono::steady_clock::now();
    RunOutput out;
    out.result = RunResult{
        .best = std::move(best_ever),
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
