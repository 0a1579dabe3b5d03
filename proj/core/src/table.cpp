#include "contspec/table.hpp"

#include <cstdio>
#include <stdexcept>

namespace contspec {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ',';
    out += table.columns[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_double(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::vector<double> parse_grid(const std::string& text) {
  const auto c1 = text.find(':');
  if (c1 == std::string::npos) {
    std::size_t pos = 0;
    const double v = std::stod(text, &pos);
    if (pos != text.size()) throw std::invalid_argument("grid: trailing characters");
    return {v};
  }
  const auto c2 = text.find(':', c1 + 1);
  if (c2 == std::string::npos)
    throw std::invalid_argument("grid: expected lo:hi:count");
  const double lo = std::stod(text.substr(0, c1));
  const double hi = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
  const long count = std::stol(text.substr(c2 + 1));
  if (count < 1 || count > 100000)
    throw std::invalid_argument("grid: count must be in [1, 1e5]");
  if (count == 1) return {lo};
  std::vector<double> grid;
  grid.reserve(count);
  for (long i = 0; i < count; ++i)
    grid.push_back(lo + (hi - lo) * static_cast<double>(i) / (count - 1));
  return grid;
}

}  // namespace contspec
