#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace rolestat {

// Quotes a field when it contains the delimiter, a double quote, CR or LF.
std::string csv_field(std::string_view value, char delimiter = ',');

// RFC 4180-style record reader. Quoted fields may span lines.
class CsvReader {
 public:
  explicit CsvReader(std::istream& in, char delimiter = ',');

  // Reads the next record into `fields`; false at end of input. Throws
  // FormatError (with the record's first line) on broken quoting.
  bool next(std::vector<std::string>& fields);

  // 1-based line on which the last returned record started.
  std::size_t line() const noexcept { return record_line_; }

 private:
  std::istream& in_;
  char delimiter_;
  std::size_t line_ = 0;
  std::size_t record_line_ = 0;
};

}  // namespace rolestat
