#include "harmonium/objectives.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "harmonium/text.hpp"

namespace harmonium {

double rosenbrock_log(double x, double y) {
    const double a = 1.0 - x;
    const double b = y - x * x;
    return std::log(1.0 + a * a + 100.0 * b * b);
}

double michalewicz2(double x, double y) {
    const auto term = [](double v, double arg) {
        const double s = std::sin(arg / std::numbers::pi);
        // sin^20 as (sin^2)^10: even power, so negative sines are safe.
        return std::sin(v) * std::pow(s * s, 10.0);
    };
    return -term(x, x * x) - term(y, 2.0 * y * y);
}

double sphere(const SolutionVector& point) {
    double sum = 0.0;
    for (const double v : point) sum += v * v;
    return sum;
}

void BenchmarkSpec::verify() const {
    if (name.empty()) throw std::invalid_argument("benchmark: name must not be empty");
    if (dims != bounds.dims())
        throw std::invalid_argument("benchmark '" + name + "': dims disagrees with bounds");
    if (!fn) throw std::invalid_argument("benchmark '" + name + "': missing function");
    if (known_optimum_point && known_optimum_point->size() != dims)
        throw std::invalid_argument("benchmark '" + name + "': optimum point dimension mismatch");
    if (known_optimum_point && !bounds.contains(*known_optimum_point))
        throw std::invalid_argument("benchmark '" + name + "': optimum point outside bounds");
    if (known_optimum_point && known_optimum_value) {
        const double actual = fn(*known_optimum_point);
        if (!(std::abs(actual - *known_optimum_value) <= 1e-3))
            throw std::logic_error("benchmark '" + name + "': value at known optimum is " +
                                   format_double(actual) + ", expected " +
                                   format_double(*known_optimum_value) + " within 1e-3");
    }
}

void BenchmarkRegistry::add(BenchmarkSpec spec) {
    spec.verify();
    if (contains(spec.name))
        throw std::invalid_argument("benchmark '" + spec.name + "' already registered");
    specs_.push_back(std::move(spec));
}

bool BenchmarkRegistry::contains(const std::string& name) const {
    for (const auto& spec : specs_)
        if (spec.name == name) return true;
    return false;
}

const BenchmarkSpec& BenchmarkRegistry::get(const std::string& name) const {
    for (const auto& spec : specs_)
        if (spec.name == name) return spec;
    throw std::out_of_range("unknown benchmark '" + name + "'");
}

std::vector<std::string> BenchmarkRegistry::names() const {
    std::vector<std::string> out;
    out.reserve(specs_.size());
    for (const auto& spec : specs_) out.push_back(spec.name);
    std::sort(out.begin(), out.end());
    return out;
}

const BenchmarkRegistry& BenchmarkRegistry::builtin() {
    static const BenchmarkRegistry registry = [] {
        BenchmarkRegistry r;
        r.add(BenchmarkSpec{
            .name = "rosenbrock_log",
            .dims = 2,
            .bounds = Bounds::cube(2, -10.0, 10.0),
            .known_optimum_point = SolutionVector{1.0, 1.0},
            .known_optimum_value = 0.0,
            .fn = [](const SolutionVector& p) { return rosenbrock_log(p[0], p[1]); },
        });
        r.add(BenchmarkSpec{
            .name = "michalewicz2",
            .dims = 2,
            .bounds = Bounds::cube(2, 0.0, std::numbers::pi),
            .known_optimum_point = SolutionVector{2.20319, 1.57049},
            .known_optimum_value = -1.801,
            .fn = [](const SolutionVector& p) { return michalewicz2(p[0], p[1]); },
        });
        r.add(BenchmarkSpec{
            .name = "sphere",
            .dims = 2,
            .bounds = Bounds::cube(2, -10.0, 10.0),
            .known_optimum_point = SolutionVector{0.0, 0.0},
            .known_optimum_value = 0.0,
            .fn = [](const SolutionVector& p) { return sphere(p); },
        });
        return r;
    }();
    return registry;
}

}  // namespace harmonium
