#pragma once

#include <string>
#include <vector>

namespace fvk::harness {

// Doubles are written with enough digits to round trip, so a table is a pure
// function of the computed values.
std::string format_double(double v);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  int column_index(const std::string& name) const;  // -1 when absent
};

// One newline terminated CSV record with RFC style quoting where needed.
std::string csv_line(const std::vector<std::string>& cells);

std::string to_csv(const Table& table);
Table read_csv(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace fvk::harness
