#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace commeval {

/// 12 significant digits, '.' separator, independent of the global locale.
/// Infinities print as "inf"/"-inf", NaN as "nan".
std::string format_real(double x);

/// Empty string for a missing value.
std::string format_real(const std::optional<double>& x);

/// Quotes a field when it holds a comma, quote or newline.
std::string csv_field(std::string_view s);

} // namespace commeval
