#pragma once

#include <cstdint>
#include <functional>
#include <istream>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rolestat/gender.hpp"

namespace rolestat {

// Years outside this range are dropped at parse time.
inline constexpr int kFirstRetainedYear = 1900;
inline constexpr int kLastRetainedYear = 2020;

// One title line from a cast list, before any role cleaning.
struct RawAppearance {
  std::string performer;  // surname-first, as listed
  std::string title;      // series quotes stripped
  std::optional<int> year;
  bool is_episode = false;
  std::optional<std::string> raw_role;
  std::optional<std::uint32_t> billing;
  std::vector<std::string> attributes;  // "(TV)" -> "TV", "(as X)" -> "as X"
  Gender gender = Gender::Male;

  bool operator==(const RawAppearance&) const = default;
};

// Every title line of the data region lands in exactly one counter.
struct ParseReport {
  std::uint64_t records_emitted = 0;
  std::uint64_t lines_skipped_malformed = 0;
  std::uint64_t records_excluded_alternative_name = 0;
  std::uint64_t records_excluded_no_year = 0;

  std::uint64_t title_lines() const noexcept {
    return records_emitted + lines_skipped_malformed +
           records_excluded_alternative_name + records_excluded_no_year;
  }

  ParseReport& operator+=(const ParseReport& other) noexcept;
  bool operator==(const ParseReport&) const = default;
};

// Fields of a title entry as written, before year resolution and filtering.
struct TitleEntry {
  std::string title;
  bool quoted = false;
  std::optional<int> title_year;  // absent for "????"
  std::optional<std::string> episode;
  std::vector<std::string> attributes;
  std::optional<std::string> role;
  std::optional<std::uint32_t> billing;
};

// Parses the text after the performer column. Returns nullopt when the text
// does not follow the title-entry grammar.
std::optional<TitleEntry> parse_title_entry(std::string_view text);

// Year of an entry: a date inside the episode braces wins over the title
// year. nullopt when neither is present.
std::optional<int> episode_year(const TitleEntry& entry);

// Maps each byte to the Unicode code point of the same value and encodes
// the result as UTF-8. Total: every byte sequence decodes.
std::string latin1_to_utf8(std::string_view bytes);

// Pull parser over an actors.list / actresses.list stream (plain or gzip).
//
// The data region starts after the "THE ACTORS LIST" / "THE ACTRESSES LIST"
// banner, its rule line, and the "Name  Titles" column header; it ends at a
// line of 29+ dashes or at "SUBMITTING UPDATES". Header lookup happens on the
// first call to next(); a stream without the header throws FormatError.
class ListFileParser {
 public:
  ListFileParser(std::istream& input, Gender gender);
  ~ListFileParser();

  ListFileParser(const ListFileParser&) = delete;
  ListFileParser& operator=(const ListFileParser&) = delete;

  // Next retained appearance, or nullopt at the end of the data region.
  std::optional<RawAppearance> next();

  const ParseReport& report() const noexcept { return report_; }

 private:
  struct Source;

  void find_data_region();
  bool read_line(std::string& line);

  std::unique_ptr<Source> source_;
  Gender gender_;
  ParseReport report_;
  std::string performer_;
  std::string line_;
  bool in_data_ = false;
  bool pending_ = false;
  bool done_ = false;
};

// Drains a ListFileParser, handing each record to `sink`.
ParseReport parse_list_stream(
    std::istream& input, Gender gender,
    const std::function<void(RawAppearance&&)>& sink);

}  // namespace rolestat
