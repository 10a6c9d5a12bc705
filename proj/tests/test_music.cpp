#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "harmonium/music.hpp"
#include "harmonium/rng.hpp"

using namespace harmonium;

TEST_CASE("pitch anchors and octave structure") {
    CHECK(freq_to_pitch(440.0) == 69.0);
    CHECK(freq_to_pitch(880.0) == doctest::Approx(81.0).epsilon(1e-12));
    CHECK(freq_to_pitch(110.0) == doctest::Approx(45.0).epsilon(1e-12));
    CHECK(freq_to_pitch(261.63) == doctest::Approx(60.0).epsilon(1e-4));
    CHECK(pitch_to_freq(69.0) == 440.0);
    CHECK(pitch_to_freq(81.0) == doctest::Approx(880.0).epsilon(1e-12));
    CHECK(pitch_to_freq(57.0) == doctest::Approx(220.0).epsilon(1e-12));
}

TEST_CASE("pitch mapping round-trips across the audible band") {
    RngStream rng(83);
    for (int i = 0; i < 50; ++i) {
        const double f = rng.uniform(20.0, 5000.0);
        CHECK(pitch_to_freq(freq_to_pitch(f)) == doctest::Approx(f).epsilon(1e-12));
    }
}

TEST_CASE("pitch is strictly increasing in frequency") {
    double last = freq_to_pitch(20.0);
    for (double f = 40.0; f <= 5120.0; f *= 2.0) {
        const double p = freq_to_pitch(f);
        CHECK(p == doctest::Approx(last + 12.0).epsilon(1e-12));
        last = p;
    }
}

TEST_CASE("nonpositive frequencies are rejected") {
    CHECK_THROWS_AS(freq_to_pitch(0.0), std::invalid_argument);
    CHECK_THROWS_AS(freq_to_pitch(-440.0), std::invalid_argument);
    CHECK_THROWS_AS(wavelength(0.0, 20.0), std::invalid_argument);
    CHECK_THROWS_AS(wavelength(-1.0, 20.0), std::invalid_argument);
}

TEST_CASE("wavelength follows the speed of sound") {
    CHECK(wavelength(440.0, 20.0) == doctest::Approx(0.7795).epsilon(1e-3));
    CHECK(wavelength(343.0, 20.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(wavelength(440.0, 0.0) == doctest::Approx(331.0 / 440.0).epsilon(1e-12));
    // Warmer air carries longer waves at a fixed frequency.
    CHECK(wavelength(440.0, 30.0) > wavelength(440.0, 10.0));
    // Cold enough that the speed model goes nonpositive: rejected.
    CHECK_THROWS_AS(wavelength(440.0, -600.0), std::invalid_argument);
}
