#pragma once

#include <charconv>
#include <string>
#include <system_error>

#include "ehpo/errors.hpp"

namespace ehpo {

// Fixed 17-significant-digit decimal rendering for real values in logs and
// reports. std::to_chars is locale-independent, so the emitted bytes depend
// only on the double value.
inline std::string format_real(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    if (res.ec != std::errc()) throw Error("failed to format real value");
    return std::string(buf, res.ptr);
}

inline double parse_real(const std::string& s) {
    double v = 0.0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw Error("malformed real value: '" + s + "'");
    return v;
}

} // namespace ehpo
