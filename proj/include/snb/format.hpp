#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace snb {

// Shortest decimal text that reads back to the same double.
std::string fmt_real(double v);

// fmt_real, or an empty field when absent.
std::string fmt_optional(const std::optional<double>& v);

// Quotes a CSV field when it contains a comma, quote or line break.
std::string csv_field(std::string_view s);

}  // namespace snb
