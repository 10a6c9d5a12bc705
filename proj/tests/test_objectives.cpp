#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "harmonium/objectives.hpp"

using namespace harmonium;

TEST_CASE("log-banana values and positivity") {
    CHECK(rosenbrock_log(1.0, 1.0) == 0.0);
    CHECK(rosenbrock_log(0.0, 0.0) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(rosenbrock_log(2.0, 4.0) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    RngStream rng(71);
    for (int i = 0; i < 2000; ++i) {
        const double x = rng.uniform(-10.0, 10.0);
        const double y = rng.uniform(-10.0, 10.0);
        CHECK(rosenbrock_log(x, y) >= 0.0);
    }
}

TEST_CASE("bivariate michalewicz values and lower bound") {
    // Each additive term lies in [-1, 1], so the sum is bounded below by -2.
    CHECK(michalewicz2(0.0, 0.0) == 0.0);
    CHECK(std::abs(michalewicz2(M_PI, M_PI)) < 1e-9);
    CHECK(michalewicz2(2.20319, 1.57049) == doctest::Approx(-1.801).epsilon(3e-3));
    RngStream rng(73);
    for (int i = 0; i < 2000; ++i) {
        const double x = rng.uniform(0.0, M_PI);
        const double y = rng.uniform(0.0, M_PI);
        const double v = michalewicz2(x, y);
        CHECK(v >= -2.0);
        CHECK(v <= 2.0);
    }
}

TEST_CASE("sphere values") {
    CHECK(sphere({0.0, 0.0, 0.0}) == 0.0);
    CHECK(sphere({3.0, 4.0}) == 25.0);
    CHECK(sphere({-2.0}) == 4.0);
    RngStream rng(79);
    for (int i = 0; i < 500; ++i) {
        CHECK(sphere({rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0)}) >= 0.0);
    }
}

TEST_CASE("benchmark verification catches a wrong known optimum") {
    BenchmarkSpec spec{.name = "broken",
                      .dims = 1,
                      .bounds = Bounds::cube(1, -1.0, 1.0),
                      .known_optimum_point = SolutionVector{0.0},
                      .known_optimum_value = 5.0,
                      .fn = sphere};
    CHECK_THROWS_AS(spec.verify(), std::logic_error);
    spec.known_optimum_value = 0.0;
    CHECK_NOTHROW(spec.verify());
}

TEST_CASE("registry rejects malformed and duplicate entries") {
    BenchmarkRegistry registry;
    BenchmarkSpec spec{.name = "tiny",
                      .dims = 1,
                      .bounds = Bounds::cube(1, -1.0, 1.0),
                      .known_optimum_point = SolutionVector{0.0},
                      .known_optimum_value = 0.0,
                      .fn = sphere};
    registry.add(spec);
    CHECK(registry.contains("tiny"));
    CHECK_THROWS_AS(registry.add(spec), std::invalid_argument);

    BenchmarkSpec nameless = spec;
    nameless.name = "";
    CHECK_THROWS_AS(registry.add(nameless), std::invalid_argument);

    BenchmarkSpec outside = spec;
    outside.name = "outside";
    outside.known_optimum_point = SolutionVector{5.0};
    CHECK_THROWS_AS(registry.add(outside), std::invalid_argument);

    CHECK_THROWS_AS(registry.get("missing"), std::out_of_range);
}

TEST_CASE("builtin registry exposes the three benchmarks with their domains") {
    const BenchmarkRegistry& registry = BenchmarkRegistry::builtin();
    CHECK(registry.names() ==
          std::vector<std::string>{"michalewicz2", "rosenbrock_log", "sphere"});

    const BenchmarkSpec& banana = registry.get("rosenbrock_log");
    CHECK(banana.dims == 2);
    CHECK(banana.bounds == Bounds::cube(2, -10.0, 10.0));
    CHECK(banana.known_optimum_point == SolutionVector{1.0, 1.0});
    CHECK(banana.known_optimum_value == 0.0);

    const BenchmarkSpec& ridge = registry.get("michalewicz2");
    CHECK(ridge.bounds == Bounds::cube(2, 0.0, M_PI));
    CHECK(ridge.known_optimum_value == -1.801);

    const BenchmarkSpec& ball = registry.get("sphere");
    CHECK(ball.bounds == Bounds::cube(2, -10.0, 10.0));
    CHECK(ball.objective()({1.0, 2.0}) == 5.0);
}
