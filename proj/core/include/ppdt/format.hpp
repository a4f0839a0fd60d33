#pragma once

#include <charconv>
#include <string>

namespace ppdt {

/// Locale-independent decimal rendering with a fixed number of significant
/// digits (outputs are byte-identical across reruns).
inline std::string format_double(double v, int significant_digits = 17) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general,
                             significant_digits);
    return std::string(buf, res.ptr);
}

/// CSV field quoting: wraps in double quotes, doubling embedded quotes.
inline std::string csv_quote(const std::string& field) {
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

}  // namespace ppdt
