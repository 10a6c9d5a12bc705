#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace harmonium {

struct SelfTestCase {
    std::string name;
    bool passed = false;
    std::string detail;  // set when the check fails
};

// Fast deterministic sanity checks: benchmark values at known points, pitch
// mapping round-trips, improvisation branch bookkeeping, trace reproducibility.
// Runs in well under a second; no files are written.
std::vector<SelfTestCase> selftest_cases();

// Prints one line per case and returns true when every case passed.
bool run_selftest(std::ostream& out);

}  // namespace harmonium
