#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace harmonium {

// Shortest round-trip decimal form of a double (the form that parses back to
// the same bits). Used everywhere numbers reach a file so that identical runs
// serialize identically on every platform.
std::string format_double(double value);

std::string format_int(std::int64_t value);

// Thin CSV helpers for the trace writer; fields never need quoting because
// every emitted field is numeric or a bare identifier.
std::string join_csv(const std::vector<std::string>& fields);

}  // namespace harmonium
