#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "rolestat/aggregate_store.hpp"
#include "rolestat/gender.hpp"
#include "rolestat/proportion.hpp"

namespace rolestat {

// Half-open year interval [start, end).
struct PeriodSpec {
  int start = 0;
  int end = 0;

  bool contains(int year) const noexcept { return year >= start && year < end; }
  int length() const noexcept { return end - start; }
  // The adjacent window of equal length ending at `start`.
  PeriodSpec previous() const noexcept { return {start - length(), start}; }

  // "START:END"; throws UsageError unless start < end.
  static PeriodSpec parse(std::string_view text);

  bool operator==(const PeriodSpec&) const = default;
};

// [1900,1920), [1920,1940), ..., [2000,2020).
std::vector<PeriodSpec> default_periods();

struct RankedRole {
  std::string role;
  std::uint64_t count = 0;
  int rank = 0;

  bool operator==(const RankedRole&) const = default;
};

// k most frequent roles over years in `period`, genders combined. Ties go to
// the lexicographically smaller role. Throws UsageError for k < 1.
std::vector<RankedRole> top_roles(const AggregateStore& store,
                                  const PeriodSpec& period, int k);

// top_roles for `period` after removing every role in the previous period's
// top `prev_window`.
std::vector<RankedRole> emerging_roles(const AggregateStore& store,
                                       const PeriodSpec& period, int k,
                                       int prev_window = 50);

// Counts only the given gender's slot, all years. Roles with zero count for
// that gender are not ranked.
std::vector<RankedRole> top_roles_by_gender(const AggregateStore& store,
                                            Gender gender, int k);

struct YearGenderRow {
  int year = 0;
  GenderCounts counts;

  Proportion female_share() const noexcept { return *counts.female_share(); }
  bool operator==(const YearGenderRow&) const = default;
};

// One row per year present in the store, ascending.
std::vector<YearGenderRow> gender_totals_by_year(const AggregateStore& store);

// Per-year sums over roles containing `query` (lower-cased first). Years
// without a match are omitted. Throws UsageError for an empty query.
std::vector<YearGenderRow> role_timeseries(const AggregateStore& store,
                                           std::string_view query);

enum class GenderBin {
  StronglyMale,
  ModeratelyMale,
  Neutral,
  ModeratelyFemale,
  StronglyFemale,
};
inline constexpr std::size_t kBinCount = 5;

std::string_view bin_name(GenderBin bin) noexcept;

struct BinnedRole {
  std::string role;
  GenderCounts counts;
  Proportion female_share;
  GenderBin bin = GenderBin::Neutral;

  bool operator==(const BinnedRole&) const = default;
};

// Roles whose all-years total exceeds `min_count` and which are not in
// `exclude_names`, ordered by p(F) (ties by role) and cut into five
// contiguous bins whose sizes differ by at most one; the remainder goes to
// the lower bins. Throws UsageError when fewer than five roles qualify.
std::array<std::vector<BinnedRole>, kBinCount> partition_roles(
    const AggregateStore& store, std::uint64_t min_count,
    const std::set<std::string>& exclude_names);

// partition_roles, then `samples_per_bin` roles drawn without replacement
// from each bin with a generator seeded by `seed`. Output is grouped by bin
// and ordered by p(F) within each bin.
std::vector<BinnedRole> bin_roles(const AggregateStore& store,
                                  std::uint64_t min_count,
                                  const std::set<std::string>& exclude_names,
                                  std::uint64_t seed,
                                  std::size_t samples_per_bin);

enum class MatchMode {
  Substring,           // role contains the keyword
  Exact,               // role equals the keyword
  SubstringNotSuffix,  // exact, or contains it without ending with it
};

std::string_view match_mode_name(MatchMode mode) noexcept;
std::optional<MatchMode> parse_match_mode(std::string_view text) noexcept;

struct Keyword {
  std::string text;  // lower-case
  MatchMode mode = MatchMode::Substring;

  bool matches(std::string_view role) const noexcept;
  bool operator==(const Keyword&) const = default;
};

struct ProfessionGroup {
  std::string name;
  std::vector<Keyword> keywords;

  bool matches(std::string_view role) const noexcept;
  bool operator==(const ProfessionGroup&) const = default;
};

struct MatchTotals {
  GenderCounts counts;
  // Absent when nothing matched.
  std::optional<Proportion> female_share() const noexcept {
    return counts.female_share();
  }
};

// Sums every store key whose role matches any keyword of the group (each key
// counted once), all years.
MatchTotals profession_stats(const AggregateStore& store,
                             const ProfessionGroup& group);

}  // namespace rolestat
