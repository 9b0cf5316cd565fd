#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace neel {

// Rectangular table with preformatted cells. Numeric cells go through
// format_sci12 so that a written file re-parses to the same text.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// Scientific notation with exactly 12 significant digits.
std::string format_sci12(double x);

// Header line, then rows, comma-separated, LF endings, no quoting (cells
// must not contain commas or newlines; enforced).
void write_csv(std::ostream& out, const CsvTable& table);
void write_csv_file(const std::string& path, const CsvTable& table);

// Inverse of write_csv; throws std::runtime_error on ragged rows.
CsvTable read_csv(std::istream& in);
CsvTable read_csv_file(const std::string& path);

}  // namespace neel
