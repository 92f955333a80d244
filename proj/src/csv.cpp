#include "commeval/csv.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

namespace commeval {

std::string format_real(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (x == 0.0) x = 0.0;  // drop the sign of -0
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 12);
    if (ec != std::errc{}) return "nan";
    return std::string(buf, end);
}

std::string format_real(const std::optional<double>& x) { return x ? format_real(*x) : std::string(); }

std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace commeval
