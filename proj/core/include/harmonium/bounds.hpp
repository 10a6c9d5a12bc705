#pragma once

#include <cstddef>
#include <vector>

#include "harmonium/rng.hpp"

namespace harmonium {

// A point in the d-dimensional real search space, in problem units.
using SolutionVector = std::vector<double>;

// Axis-aligned box constraints. Immutable after construction; construction
// rejects lower[i] >= upper[i], non-finite limits, and mismatched lengths.
class Bounds {
public:
    Bounds(std::vector<double> lower, std::vector<double> upper);

    // d-dimensional cube [lo,hi]^dims.
    static Bounds cube(std::size_t dims, double lo, double hi);

    std::size_t dims() const { return lower_.size(); }
    double lower(std::size_t i) const { return lower_[i]; }
    double upper(std::size_t i) const { return upper_[i]; }
    double width(std::size_t i) const { return upper_[i] - lower_[i]; }
    const std::vector<double>& lower_all() const { return lower_; }
    const std::vector<double>& upper_all() const { return upper_; }

    bool contains(const SolutionVector& point) const;

    bool operator==(const Bounds&) const = default;

private:
    std::vector<double> lower_;
    std::vector<double> upper_;
};

// Component-wise saturation to the box. Idempotent. Throws on dimension
// mismatch or NaN components.
SolutionVector clamp(const SolutionVector& point, const Bounds& bounds);

// Independent uniform draw per dimension over [lower[i], upper[i]).
SolutionVector uniform_point(const Bounds& bounds, RngStream& rng);

}  // namespace harmonium
