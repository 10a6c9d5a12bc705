#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>

#include "harmonium/bounds.hpp"

namespace harmonium {

// A box-bounded objective to minimize. The callable must be pure and
// deterministic: identical input yields bit-identical output.
struct ObjectiveFunction {
    std::string name;
    Bounds bounds;
    std::function<double(const SolutionVector&)> fn;

    double operator()(const SolutionVector& x) const { return fn(x); }
};

// A point paired with its objective value. Produced only by the evaluators
// below so point and value never go out of sync.
struct EvaluatedSolution {
    SolutionVector point;
    double value = 0.0;
};

// Evaluates the objective at a point. Throws std::runtime_error naming the
// offending point if the objective returns NaN or infinity.
EvaluatedSolution evaluate_at(const ObjectiveFunction& objective, SolutionVector point);

// Counts every objective call made through it. Budget accounting in run
// results comes from this counter, not from per-algorithm arithmetic.
class EvalCounter {
public:
    explicit EvalCounter(const ObjectiveFunction& objective) : objective_(&objective) {}

    EvaluatedSolution evaluate(SolutionVector point) {
        ++count_;
        return evaluate_at(*objective_, std::move(point));
    }

    std::int64_t count() const { return count_; }
    const Bounds& bounds() const { return objective_->bounds; }
    const ObjectiveFunction& objective() const { return *objective_; }

private:
    const ObjectiveFunction* objective_;
    std::int64_t count_ = 0;
};

}  // namespace harmonium
