#include "rolestat/csv.hpp"

#include "rolestat/errors.hpp"

namespace rolestat {

std::string csv_field(std::string_view value, char delimiter) {
  if (value.find_first_of(std::string{delimiter, '"', '\r', '\n'}) ==
      std::string_view::npos) {
    return std::string(value);
  }
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

CsvReader::CsvReader(std::istream& in, char delimiter)
    : in_(in), delimiter_(delimiter) {}

bool CsvReader::next(std::vector<std::string>& fields) {
  fields.clear();
  std::string line;
  if (!std::getline(in_, line)) {
    if (in_.bad()) throw IoError("read failure on CSV input");
    return false;
  }
  ++line_;
  record_line_ = line_;

  std::string field;
  bool quoted = false;
  bool after_quote = false;
  std::size_t i = 0;
  while (true) {
    if (i == line.size()) {
      if (!quoted) {
        if (!field.empty() && field.back() == '\r' && !after_quote) {
          field.pop_back();
        }
        break;
      }
      // Quoted field continues on the next physical line.
      if (!std::getline(in_, line)) {
        throw FormatError("unterminated quoted field", record_line_);
      }
      ++line_;
      field.push_back('\n');
      i = 0;
      continue;
    }
    const char c = line[i++];
    if (quoted) {
      if (c != '"') {
        field.push_back(c);
      } else if (i < line.size() && line[i] == '"') {
        field.push_back('"');
        ++i;
      } else {
        quoted = false;
        after_quote = true;
      }
    } else if (c == delimiter_) {
      fields.push_back(std::move(field));
      field.clear();
      after_quote = false;
    } else if (c == '"' && field.empty() && !after_quote) {
      quoted = true;
    } else if (after_quote) {
      if (c == '\r' && i == line.size()) continue;
      throw FormatError("unexpected character after closing quote",
                        record_line_);
    } else {
      field.push_back(c);
    }
  }
  fields.push_back(std::move(field));
  return true;
}

}  // namespace rolestat
