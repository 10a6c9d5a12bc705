#include "harmonium/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace harmonium {

Bounds::Bounds(std::vector<double> lower, std::vector<double> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
    if (lower_.empty()) throw std::invalid_argument("Bounds: dimension must be positive");
    if (lower_.size() != upper_.size())
        throw std::invalid_argument("Bounds: lower and upper must have equal length");
    for (std::size_t i = 0; i < lower_.size(); ++i) {
        if (!std::isfinite(lower_[i]) || !std::isfinite(upper_[i]))
            throw std::invalid_argument("Bounds: limits must be finite");
        if (!(lower_[i] < upper_[i]))
            throw std::invalid_argument("Bounds: lower must be strictly below upper");
    }
}

Bounds Bounds::cube(std::size_t dims, double lo, double hi) {
    return Bounds(std::vector<double>(dims, lo), std::vector<double>(dims, hi));
}

bool Bounds::contains(const SolutionVector& point) const {
    if (point.size() != dims()) return false;
    for (std::size_t i = 0; i < point.size(); ++i) {
        if (!(point[i] >= lower_[i] && point[i] <= upper_[i])) return false;
    }
    return true;
}

SolutionVector clamp(const SolutionVector& point, const Bounds& bounds) {
    if (point.size() != bounds.dims())
        throw std::invalid_argument("clamp: point dimension mismatch");
    SolutionVector out(point.size());
    for (std::size_t i = 0; i < point.size(); ++i) {
        if (std::isnan(point[i])) throw std::invalid_argument("clamp: NaN component");
        out[i] = std::clamp(point[i], bounds.lower(i), bounds.upper(i));
    }
    return out;
}

SolutionVector uniform_point(const Bounds& bounds, RngStream& rng) {
    SolutionVector out(bounds.dims());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = rng.uniform(bounds.lower(i), bounds.upper(i));
    return out;
}

}  // namespace harmonium
