#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "harmonium/objective.hpp"

namespace harmonium {

// Logarithmic Rosenbrock banana ln(1 + (1-x)^2 + 100(y - x^2)^2).
// Nonnegative everywhere; zero only at (1,1). Optimization domain [-10,10]^2.
double rosenbrock_log(double x, double y);

// Bivariate Michalewicz variant
//   -sin(x) sin^20(x^2/pi) - sin(y) sin^20(2 y^2/pi)
// on [0,pi]^2, global minimum about -1.801 near (2.20319, 1.57049). Note the
// second term's argument is 2 y^2/pi.
double michalewicz2(double x, double y);

// Sum of squared components; minimum 0 at the origin. Sanity objective.
double sphere(const SolutionVector& point);

// A named objective with its domain and, when known, published optimum.
struct BenchmarkSpec {
    std::string name;
    std::size_t dims = 0;
    Bounds bounds;
    std::optional<SolutionVector> known_optimum_point;
    std::optional<double> known_optimum_value;
    std::function<double(const SolutionVector&)> fn;

    ObjectiveFunction objective() const { return {name, bounds, fn}; }

    // When both known fields are present, checks the function value at the
    // known point against the known value to within 1e-3. Throws otherwise.
    void verify() const;
};

// Name-keyed benchmark lookup. Every spec is verified when added.
class BenchmarkRegistry {
public:
    BenchmarkRegistry() = default;

    void add(BenchmarkSpec spec);
    bool contains(const std::string& name) const;
    const BenchmarkSpec& get(const std::string& name) const;  // throws on unknown name
    std::vector<std::string> names() const;                   // sorted

    // rosenbrock_log, michalewicz2, and sphere; self-checked on first use.
    static const BenchmarkRegistry& builtin();

private:
    std::vector<BenchmarkSpec> specs_;
};

}  // namespace harmonium
