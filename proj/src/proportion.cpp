#include "rolestat/proportion.hpp"

#include <cstdio>

namespace rolestat {

std::strong_ordering Proportion::operator<=>(
    const Proportion& other) const noexcept {
  __extension__ typedef unsigned __int128 u128;
  const u128 lhs = static_cast<u128>(numerator) * other.denominator;
  const u128 rhs = static_cast<u128>(other.numerator) * denominator;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string format_fixed4(const Proportion& p) {
  __extension__ typedef unsigned __int128 u128;
  const u128 scaled = static_cast<u128>(p.numerator) * 10000u;
  u128 q = scaled / p.denominator;
  const u128 r = scaled % p.denominator;
  const u128 twice = 2 * r;
  if (twice > p.denominator || (twice == p.denominator && (q & 1u) != 0)) ++q;

  const auto whole = static_cast<unsigned long long>(q / 10000u);
  const auto frac = static_cast<unsigned>(q % 10000u);
  char buf[48];
  std::snprintf(buf, sizeof buf, "%llu.%04u", whole, frac);
  return buf;
}

std::string format_fixed4(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", value);
  std::string out = buf;
  if (out == "-0.0000") out = "0.0000";
  return out;
}

}  // namespace rolestat
