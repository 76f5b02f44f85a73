#include "rolestat/role_normalizer.hpp"

#include <array>

namespace rolestat {
namespace {

constexpr std::array<std::string_view, 10> kOrdinals = {
    "first", "second", "third", "fourth", "fifth",
    "1st",   "2nd",    "3rd",   "4th",    "5th"};

bool is_ws(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

// Trim plus inner-run collapse to a single space.
std::string collapse_whitespace(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool pending_space = false;
  for (char c : s) {
    if (is_ws(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

std::string strip_parentheticals(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  int depth = 0;
  for (char c : s) {
    if (c == '(') {
      if (depth++ == 0) out.push_back(' ');
    } else if (c == ')') {
      if (depth > 0) --depth;
    } else if (depth == 0) {
      out.push_back(c);
    }
  }
  return out;
}

std::string_view strip_one_ordinal(std::string_view s) {
  for (std::string_view ord : kOrdinals) {
    if (s.size() > ord.size() && s.starts_with(ord) && s[ord.size()] == ' ') {
      return s.substr(ord.size() + 1);
    }
  }
  return s;
}

bool is_self_normalized(std::string_view s) {
  return s == "himself" || s == "herself" || s == "themselves";
}

}  // namespace

std::string simple_lowercase(std::string_view text) {
  std::string out(text);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto b = static_cast<unsigned char>(out[i]);
    if (b >= 'A' && b <= 'Z') {
      out[i] = static_cast<char>(b + 32);
    } else if (b == 0xC3 && i + 1 < out.size()) {
      // U+00C0..U+00DE encode as C3 80..C3 9E; U+00D7 is C3 97.
      const auto next = static_cast<unsigned char>(out[i + 1]);
      if (next >= 0x80 && next <= 0x9E && next != 0x97) {
        out[i + 1] = static_cast<char>(next + 0x20);
      }
      if (next >= 0x80 && next <= 0xBF) ++i;
    }
  }
  return out;
}

bool is_self_role(std::string_view raw) {
  return is_self_normalized(simple_lowercase(collapse_whitespace(raw)));
}

std::vector<std::string> clean_role(std::string_view raw) {
  const std::string whole =
      simple_lowercase(collapse_whitespace(strip_parentheticals(raw)));
  if (whole == "n/a" || is_self_normalized(whole)) return {};

  std::vector<std::string> roles;
  std::string_view rest = whole;
  while (true) {
    const auto slash = rest.find('/');
    std::string fragment = collapse_whitespace(rest.substr(0, slash));
    std::string_view core = fragment;
    while (true) {
      const auto stripped = strip_one_ordinal(core);
      if (stripped.size() == core.size()) break;
      core = stripped;
    }
    if (!core.empty() && !is_self_normalized(core)) roles.emplace_back(core);
    if (slash == std::string_view::npos) break;
    rest.remove_prefix(slash + 1);
  }
  return roles;
}

}  // namespace rolestat
