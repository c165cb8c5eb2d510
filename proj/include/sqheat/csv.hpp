#pragma once

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

namespace sqheat::csv {

/// Shortest-form rendering with 15 significant digits and '.' as decimal
/// separator regardless of locale. Negative zero prints as 0.
[[nodiscard]] std::string format_number(double value);

using Cell = std::variant<double, std::string_view>;

/// Comma-separated, newline-terminated. Text cells are written verbatim.
void write_row(std::ostream& out, std::initializer_list<Cell> cells);

}  // namespace sqheat::csv
