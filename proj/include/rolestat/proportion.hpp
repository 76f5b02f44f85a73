#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace rolestat {

// Exact ratio numerator/denominator with denominator > 0. Kept as integers so
// that comparisons and complements are free of rounding.
struct Proportion {
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 1;

  double value() const noexcept {
    return static_cast<double>(numerator) / static_cast<double>(denominator);
  }

  Proportion complement() const noexcept {
    return {denominator - numerator, denominator};
  }

  // Compares by value (cross-multiplication), not by representation.
  std::strong_ordering operator<=>(const Proportion& other) const noexcept;
  bool operator==(const Proportion& other) const noexcept {
    return (*this <=> other) == std::strong_ordering::equal;
  }
};

// Four decimal places, round-half-even, computed exactly from the ratio.
std::string format_fixed4(const Proportion& p);

// Four decimal places for a plain double (printf rounding of the binary
// value).
std::string format_fixed4(double value);

}  // namespace rolestat
