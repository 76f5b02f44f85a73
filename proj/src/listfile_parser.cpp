#include "rolestat/listfile_parser.hpp"

#include <charconv>
#include <utility>

#include "rolestat/errors.hpp"
#include "rolestat/gzip_istream.hpp"

namespace rolestat {
namespace {

constexpr std::string_view kBannerActors = "THE ACTORS LIST";
constexpr std::string_view kBannerActresses = "THE ACTRESSES LIST";
constexpr std::string_view kEndRule = "-----------------------------";
constexpr std::string_view kEndSubmitting = "SUBMITTING UPDATES";

constexpr int kMinYear = 1800;
constexpr int kMaxYear = 2100;

bool is_space(char c) { return c == ' ' || c == '\t'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

bool is_blank(std::string_view s) { return trim(s).empty(); }

bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::optional<int> four_digit_year(std::string_view s) {
  if (s.size() != 4) return std::nullopt;
  int value = 0;
  for (char c : s) {
    if (!is_digit(c)) return std::nullopt;
    value = value * 10 + (c - '0');
  }
  if (value < kMinYear || value > kMaxYear) return std::nullopt;
  return value;
}

bool is_roman(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c != 'I' && c != 'V' && c != 'X' && c != 'L') return false;
  }
  return true;
}

// Length of "(YYYY)", "(????)" or "(YYYY/II)" starting at `s`, or 0.
// `year` receives the parsed year; "????" and out-of-range digits leave it
// empty.
std::size_t match_year_group(std::string_view s, std::optional<int>& year) {
  if (s.size() < 6 || s[0] != '(') return 0;
  const auto close = s.find(')');
  if (close == std::string_view::npos) return 0;
  std::string_view body = s.substr(1, close - 1);
  const auto slash = body.find('/');
  std::string_view digits = body.substr(0, slash);
  if (slash != std::string_view::npos && !is_roman(body.substr(slash + 1))) {
    return 0;
  }
  if (digits == "????") {
    year.reset();
    return close + 1;
  }
  if (digits.size() != 4) return 0;
  for (char c : digits) {
    if (!is_digit(c)) return 0;
  }
  year = four_digit_year(digits);
  return close + 1;
}

// Index one past the delimiter closing the group opened at s[0], honouring
// nesting. npos when unterminated.
std::size_t match_group(std::string_view s, char open, char close) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == open) {
      ++depth;
    } else if (s[i] == close) {
      if (--depth == 0) return i + 1;
    }
  }
  return std::string_view::npos;
}

bool starts_with_end_sentinel(std::string_view line) {
  return line.starts_with(kEndRule) || line.starts_with(kEndSubmitting);
}

bool is_rule_line(std::string_view line) {
  line = trim(line);
  if (line.size() < 3) return false;
  const char c = line.front();
  if (c != '=' && c != '-') return false;
  for (char ch : line) {
    if (ch != c) return false;
  }
  return true;
}

// "Name<ws>Titles"
bool is_column_header(std::string_view line) {
  line = trim(line);
  if (!line.starts_with("Name")) return false;
  std::string_view rest = line.substr(4);
  if (rest.empty() || !is_space(rest.front())) return false;
  return trim(rest) == "Titles";
}

// "----<ws>------" under the column header.
bool is_header_underline(std::string_view line) {
  line = trim(line);
  const auto gap = line.find_first_of(" \t");
  if (gap == std::string_view::npos) return false;
  return is_rule_line(line.substr(0, gap)) && is_rule_line(line.substr(gap));
}

}  // namespace

ParseReport& ParseReport::operator+=(const ParseReport& other) noexcept {
  records_emitted += other.records_emitted;
  lines_skipped_malformed += other.lines_skipped_malformed;
  records_excluded_alternative_name += other.records_excluded_alternative_name;
  records_excluded_no_year += other.records_excluded_no_year;
  return *this;
}

std::string latin1_to_utf8(std::string_view bytes) {
  std::string out;
  out.reserve(bytes.size());
  for (char ch : bytes) {
    const auto b = static_cast<unsigned char>(ch);
    if (b < 0x80) {
      out.push_back(ch);
    } else {
      out.push_back(static_cast<char>(0xC0 | (b >> 6)));
      out.push_back(static_cast<char>(0x80 | (b & 0x3F)));
    }
  }
  return out;
}

std::optional<TitleEntry> parse_title_entry(std::string_view text) {
  text = trim(text);
  TitleEntry entry;

  // The title runs up to the first " (YYYY)" group.
  std::size_t pos = std::string_view::npos;
  std::size_t year_len = 0;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (text[i] != '(' || !is_space(text[i - 1])) continue;
    year_len = match_year_group(text.substr(i), entry.title_year);
    if (year_len != 0) {
      pos = i;
      break;
    }
  }
  if (pos == std::string_view::npos) return std::nullopt;

  std::string_view title = trim(text.substr(0, pos));
  if (title.size() >= 2 && title.front() == '"' && title.back() == '"') {
    title = title.substr(1, title.size() - 2);
    entry.quoted = true;
  }
  if (title.empty()) return std::nullopt;
  entry.title = std::string(title);

  std::string_view rest = text.substr(pos + year_len);
  while (true) {
    rest = trim(rest);
    if (rest.empty()) break;
    const char c = rest.front();
    if (c == '{' && !entry.episode && entry.attributes.empty() && !entry.role &&
        !entry.billing) {
      const auto end = match_group(rest, '{', '}');
      if (end == std::string_view::npos) return std::nullopt;
      entry.episode = std::string(rest.substr(1, end - 2));
      rest.remove_prefix(end);
    } else if (c == '(' && !entry.role && !entry.billing) {
      const auto end = match_group(rest, '(', ')');
      if (end == std::string_view::npos) return std::nullopt;
      entry.attributes.emplace_back(rest.substr(1, end - 2));
      rest.remove_prefix(end);
    } else if (c == '[' && !entry.role && !entry.billing) {
      const auto end = match_group(rest, '[', ']');
      if (end == std::string_view::npos) return std::nullopt;
      entry.role = std::string(rest.substr(1, end - 2));
      rest.remove_prefix(end);
    } else if (c == '<' && !entry.billing) {
      const auto end = rest.find('>');
      if (end == std::string_view::npos || end == 1) return std::nullopt;
      std::uint32_t value = 0;
      const char* first = rest.data() + 1;
      const char* last = rest.data() + end;
      auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc{} || ptr != last || value == 0 || *first == '+') {
        return std::nullopt;
      }
      entry.billing = value;
      rest.remove_prefix(end + 1);
    } else {
      return std::nullopt;
    }
  }
  return entry;
}

std::optional<int> episode_year(const TitleEntry& entry) {
  if (entry.episode) {
    // "(YYYY)" or "(YYYY-MM-DD)" anywhere inside the braces.
    std::string_view ep = *entry.episode;
    for (std::size_t i = 0; i + 5 < ep.size(); ++i) {
      if (ep[i] != '(') continue;
      const auto close = ep.find(')', i);
      if (close == std::string_view::npos) break;
      std::string_view body = ep.substr(i + 1, close - i - 1);
      if (body.size() == 10) {
        if (body[4] != '-' || body[7] != '-' || !is_digit(body[5]) ||
            !is_digit(body[6]) || !is_digit(body[8]) || !is_digit(body[9])) {
          continue;
        }
        body = body.substr(0, 4);
      }
      if (auto y = four_digit_year(body)) return y;
    }
  }
  return entry.title_year;
}

struct ListFileParser::Source {
  explicit Source(std::istream& raw) : decoded(raw) {}
  DecodedInput decoded;
};

ListFileParser::ListFileParser(std::istream& input, Gender gender)
    : source_(std::make_unique<Source>(input)), gender_(gender) {}

ListFileParser::~ListFileParser() = default;

bool ListFileParser::read_line(std::string& line) {
  std::istream& in = source_->decoded.stream();
  std::string bytes;
  if (!std::getline(in, bytes)) {
    if (in.bad()) throw IoError("read failure on list stream");
    return false;
  }
  if (!bytes.empty() && bytes.back() == '\r') bytes.pop_back();
  line = latin1_to_utf8(bytes);
  return true;
}

void ListFileParser::find_data_region() {
  enum class Stage { Banner, Rule, Header } stage = Stage::Banner;
  std::string line;
  while (read_line(line)) {
    switch (stage) {
      case Stage::Banner: {
        const auto t = trim(line);
        if (t == kBannerActors || t == kBannerActresses) stage = Stage::Rule;
        break;
      }
      case Stage::Rule:
        if (is_blank(line)) break;
        stage = is_rule_line(line) ? Stage::Header : Stage::Banner;
        break;
      case Stage::Header:
        if (!is_column_header(line)) break;
        in_data_ = true;
        // Skip the "----  ------" underline when present.
        if (read_line(line_)) {
          if (is_header_underline(line_)) line_.clear();
          else pending_ = true;
        }
        return;
    }
  }
  if (stage == Stage::Header) {
    throw FormatError("missing sentinel: 'Name  Titles' column header");
  }
  throw FormatError(
      "missing sentinel: 'THE ACTORS LIST' / 'THE ACTRESSES LIST' banner "
      "followed by a rule line");
}

std::optional<RawAppearance> ListFileParser::next() {
  if (done_) return std::nullopt;
  if (!in_data_) find_data_region();

  std::string line;
  while (true) {
    if (pending_) {
      line = std::move(line_);
      pending_ = false;
    } else if (!read_line(line)) {
      done_ = true;
      return std::nullopt;
    }

    if (starts_with_end_sentinel(line)) {
      done_ = true;
      return std::nullopt;
    }
    if (is_blank(line)) {
      performer_.clear();
      continue;
    }

    std::string_view view = line;
    std::string_view entry_text;
    if (is_space(view.front())) {
      if (performer_.empty()) {
        ++report_.lines_skipped_malformed;
        continue;
      }
      entry_text = view;
    } else {
      const auto tab = view.find('\t');
      const auto name = tab == std::string_view::npos
                            ? std::string_view{}
                            : trim(view.substr(0, tab));
      if (name.empty()) {
        performer_.clear();
        ++report_.lines_skipped_malformed;
        continue;
      }
      performer_ = std::string(name);
      entry_text = view.substr(tab);
    }

    auto entry = parse_title_entry(entry_text);
    if (!entry) {
      ++report_.lines_skipped_malformed;
      continue;
    }

    bool alternative_name = false;
    for (const auto& attr : entry->attributes) {
      if (attr.starts_with("as ")) alternative_name = true;
    }
    if (alternative_name) {
      ++report_.records_excluded_alternative_name;
      continue;
    }

    const auto year = episode_year(*entry);
    if (!year || *year < kFirstRetainedYear || *year > kLastRetainedYear) {
      ++report_.records_excluded_no_year;
      continue;
    }

    ++report_.records_emitted;
    RawAppearance rec;
    rec.performer = performer_;
    rec.title = std::move(entry->title);
    rec.year = year;
    rec.is_episode = entry->episode.has_value();
    rec.raw_role = std::move(entry->role);
    rec.billing = entry->billing;
    rec.attributes = std::move(entry->attributes);
    rec.gender = gender_;
    return rec;
  }
}

ParseReport parse_list_stream(
    std::istream& input, Gender gender,
    const std::function<void(RawAppearance&&)>& sink) {
  ListFileParser parser(input, gender);
  while (auto rec = parser.next()) sink(std::move(*rec));
  return parser.report();
}

}  // namespace rolestat
