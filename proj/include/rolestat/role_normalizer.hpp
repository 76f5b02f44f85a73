#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace rolestat {

// Lower-cases ASCII letters and the Latin-1 capitals U+00C0..U+00DE (except
// U+00D7) in UTF-8 text. Other bytes pass through unchanged, so the result
// is locale-independent and idempotent.
std::string simple_lowercase(std::string_view text);

// True iff the trimmed, lower-cased text is exactly "himself", "herself" or
// "themselves".
bool is_self_role(std::string_view raw);

// Cleans a raw bracketed role into zero or more normalized roles.
//
//   1. text inside parentheses is removed (nesting-aware; an unmatched "("
//      swallows the rest, a stray ")" is dropped);
//   2. "n/a" and self-references filter the whole role;
//   3. the remainder is split on "/";
//   4. each fragment is lower-cased and whitespace-collapsed, then ordinal
//      prefixes first..fifth / 1st..5th (followed by whitespace) are
//      stripped until none remain;
//   5. empty fragments and self-reference fragments are dropped.
//
// Every output is a fixed point: clean_role(r) == {r}.
std::vector<std::string> clean_role(std::string_view raw);

}  // namespace rolestat
