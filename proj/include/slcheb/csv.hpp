#pragma once

#include <cstdio>
#include <cstdlib>
#include <string>

namespace slcheb {

/// 15-significant-digit scientific notation with an uppercase E and a bare
/// exponent (no plus sign, no zero padding): 2.07922884552238E1,
/// 1.74401354382355E-3. Locale-independent; used for all CSV output so runs
/// are byte-stable.
inline std::string format_sci(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.14E", v);
    std::string s(buf);
    const auto e = s.find('E');
    const int exponent = std::atoi(s.c_str() + e + 1);
    return s.substr(0, e) + "E" + std::to_string(exponent);
}

}  // namespace slcheb
