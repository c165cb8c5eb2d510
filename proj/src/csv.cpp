#include "sqheat/csv.hpp"

#include <array>
#include <charconv>
#include <ostream>

namespace sqheat::csv {

std::string format_number(double value) {
  if (value == 0.0) return "0";
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                       std::chars_format::general, 15);
  return std::string(buf.data(), end);
}

void write_row(std::ostream& out, std::initializer_list<Cell> cells) {
  bool first = true;
  for (const Cell& cell : cells) {
    if (!first) out << ',';
    first = false;
    if (const double* v = std::get_if<double>(&cell)) {
      out << format_number(*v);
    } else {
      out << std::get<std::string_view>(cell);
    }
  }
  out << '\n';
}

}  // namespace sqheat::csv
