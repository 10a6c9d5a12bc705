#include "harmonium/objective.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "harmonium/text.hpp"

namespace harmonium {

EvaluatedSolution evaluate_at(const ObjectiveFunction& objective, SolutionVector point) {
    if (point.size() != objective.bounds.dims())
        throw std::runtime_error("objective '" + objective.name + "': point dimension mismatch");
    const double value = objective.fn(point);
    if (!std::isfinite(value)) {
        std::string where = "(";
        for (std::size_t i = 0; i < point.size(); ++i) {
            if (i != 0) where += ", ";
            where += format_double(point[i]);
        }
        where += ")";
        throw std::runtime_error("objective '" + objective.name + "' returned " +
                                 format_double(value) + " at " + where);
    }
    return EvaluatedSolution{std::move(point), value};
}

}  // namespace harmonium
