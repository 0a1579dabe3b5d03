#pragma once

#include <string>
#include <vector>

namespace contspec {

/// Column-labeled numeric table for CSV export.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// Fixed 17-significant-digit float rendering; stable across runs.
std::string format_double(double v);

std::string to_csv(const Table& table);

/// Parses "lo:hi:count" into a linear grid; a bare number becomes a
/// single-point grid. Throws std::invalid_argument on malformed input.
std::vector<double> parse_grid(const std::string& text);

}  // namespace contspec
