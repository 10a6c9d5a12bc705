#pragma once

#include <array>
#include <cstdint>

namespace harmonium {

// Deterministic 64-bit-seeded random stream: xoshiro256++ state seeded via
// splitmix64. Self-contained so identical seeds give identical draw sequences
// on every platform and standard library, which the reproducibility contract
// depends on. Not cryptographic.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed);

    std::uint64_t next_u64();

    // Uniform in [0,1) with 53-bit resolution.
    double next_double();

    // Uniform in [lo,hi).
    double uniform(double lo, double hi);

    // Uniform in [-1,1).
    double symmetric();

    // Uniform integer in [0,n); n must be >= 1. Bias is O(n/2^64).
    std::uint64_t uniform_int(std::uint64_t n);

    // Standard normal via Box-Muller; consumes exactly two uniform draws.
    double gaussian();

    // Child stream seeded from the next draw of this one. The parent advances
    // by one draw; parent and child sequences are then unrelated for any
    // practical purpose.
    RngStream split();

    std::uint64_t seed() const { return seed_; }

private:
    std::array<std::uint64_t, 4> state_;
    std::uint64_t seed_;
};

}  // namespace harmonium
