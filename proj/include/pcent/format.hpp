#pragma once

#include <charconv>
#include <cstdio>
#include <string>

namespace pcent {

/// Shortest text that parses back to the same double.
inline std::string format_real(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

/// Fixed 17 significant digits, the CSV output format.
inline std::string format_real17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace pcent
