#include "neel/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace neel {

std::string format_sci12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.11e", x);
  return buf;
}

namespace {

void check_cell(const std::string& cell) {
  if (cell.find_first_of(",\n\r") != std::string::npos)
    throw std::runtime_error("csv cell contains a separator: " + cell);
}

}  // namespace

void write_csv(std::ostream& out, const CsvTable& table) {
  const std::size_t w = table.header.size();
  for (std::size_t i = 0; i < w; ++i) {
    check_cell(table.header[i]);
    out << table.header[i] << (i + 1 < w ? "," : "");
  }
  out << '\n';
  for (const auto& row : table.rows) {
    if (row.size() != w)
      throw std::runtime_error("csv row width mismatch");
    for (std::size_t i = 0; i < w; ++i) {
      check_cell(row[i]);
      out << row[i] << (i + 1 < w ? "," : "");
    }
    out << '\n';
  }
}

void write_csv_file(const std::string& path, const CsvTable& table) {
  std::ofstream out(path, std::ios::trunc | std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_csv(out, table);
}

CsvTable read_csv(std::istream& in) {
  CsvTable table;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> fields;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) fields.push_back(cell);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    if (first) {
      table.header = std::move(fields);
      first = false;
    } else {
      if (fields.size() != table.header.size())
        throw std::runtime_error("csv row width mismatch on read");
      table.rows.push_back(std::move(fields));
    }
  }
  return table;
}

CsvTable read_csv_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  return read_csv(in);
}

}  // namespace neel
