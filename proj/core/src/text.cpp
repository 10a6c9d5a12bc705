#include "harmonium/text.hpp"

#include <charconv>
#include <cmath>

namespace harmonium {

std::string format_double(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    (void)ec;  // 64 bytes always suffice for the shortest form
    return std::string(buf, ptr);
}

std::string format_int(std::int64_t value) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    (void)ec;
    return std::string(buf, ptr);
}

std::string join_csv(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i != 0) out += ',';
        out += fields[i];
    }
    return out;
}

}  // namespace harmonium
