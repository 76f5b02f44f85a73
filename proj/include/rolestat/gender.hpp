#pragma once

#include <optional>
#include <string_view>

namespace rolestat {

// Binary performer gender, inherited from the source list file.
enum class Gender { Female, Male };

constexpr char gender_code(Gender g) noexcept {
  return g == Gender::Female ? 'F' : 'M';
}

inline std::optional<Gender> parse_gender(std::string_view text) noexcept {
  if (text == "F" || text == "f") return Gender::Female;
  if (text == "M" || text == "m") return Gender::Male;
  return std::nullopt;
}

}  // namespace rolestat
