#include "rolestat/trend_analytics.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "rolestat/errors.hpp"
#include "rolestat/role_normalizer.hpp"

namespace rolestat {
namespace {

using RoleCounts = std::unordered_map<std::string, std::uint64_t>;

void require_k(int k) {
  if (k < 1) throw UsageError("k must be >= 1, got " + std::to_string(k));
}

std::vector<RankedRole> rank(const RoleCounts& counts, int k) {
  std::vector<RankedRole> all;
  all.reserve(counts.size());
  for (const auto& [role, count] : counts) {
    if (count > 0) all.push_back({role, count, 0});
  }
  const auto by_count_then_role = [](const RankedRole& a, const RankedRole& b) {
    if (a.count != b.count) return a.count > b.count;
    return a.role < b.role;
  };
  const auto n = std::min(all.size(), static_cast<std::size_t>(k));
  std::partial_sort(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(n),
                    all.end(), by_count_then_role);
  all.resize(n);
  for (std::size_t i = 0; i < n; ++i) all[i].rank = static_cast<int>(i + 1);
  return all;
}

RoleCounts period_counts(const AggregateStore& store, const PeriodSpec& period) {
  RoleCounts out;
  for (const auto& [key, counts] : store.entries()) {
    if (period.contains(key.year)) out[key.role] += counts.total();
  }
  return out;
}

std::unordered_map<std::string, GenderCounts> all_year_totals(
    const AggregateStore& store) {
  std::unordered_map<std::string, GenderCounts> out;
  for (const auto& [key, counts] : store.entries()) out[key.role] += counts;
  return out;
}

// Unbiased draw from [0, bound) using only the raw 64-bit engine output, so
// results are identical on every standard library.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

bool less_by_share(const BinnedRole& a, const BinnedRole& b) {
  if (const auto c = a.female_share <=> b.female_share; c != 0) return c < 0;
  return a.role < b.role;
}

}  // namespace

PeriodSpec PeriodSpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  const auto bad = [&] {
    return UsageError("bad period '" + std::string(text) +
                      "', expected START:END with START < END");
  };
  if (colon == std::string_view::npos) throw bad();
  PeriodSpec p;
  const auto parse_int = [&](std::string_view s, int& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) throw bad();
  };
  parse_int(text.substr(0, colon), p.start);
  parse_int(text.substr(colon + 1), p.end);
  if (p.start >= p.end) throw bad();
  return p;
}

std::vector<PeriodSpec> default_periods() {
  std::vector<PeriodSpec> out;
  for (int y = 1900; y < 2020; y += 20) out.push_back({y, y + 20});
  return out;
}

std::vector<RankedRole> top_roles(const AggregateStore& store,
                                  const PeriodSpec& period, int k) {
  require_k(k);
  return rank(period_counts(store, period), k);
}

std::vector<RankedRole> emerging_roles(const AggregateStore& store,
                                       const PeriodSpec& period, int k,
                                       int prev_window) {
  require_k(k);
  if (prev_window < 1) throw UsageError("prev_window must be >= 1");
  auto current = period_counts(store, period);
  for (const auto& seen : top_roles(store, period.previous(), prev_window)) {
    current.erase(seen.role);
  }
  return rank(current, k);
}

std::vector<RankedRole> top_roles_by_gender(const AggregateStore& store,
                                            Gender gender, int k) {
  require_k(k);
  RoleCounts counts;
  for (const auto& [key, pair] : store.entries()) {
    if (pair.of(gender) > 0) counts[key.role] += pair.of(gender);
  }
  return rank(counts, k);
}

std::vector<YearGenderRow> gender_totals_by_year(const AggregateStore& store) {
  std::map<int, GenderCounts> by_year;
  for (const auto& [key, counts] : store.entries()) by_year[key.year] += counts;
  std::vector<YearGenderRow> out;
  out.reserve(by_year.size());
  for (const auto& [year, counts] : by_year) out.push_back({year, counts});
  return out;
}

std::vector<YearGenderRow> role_timeseries(const AggregateStore& store,
                                           std::string_view query) {
  const std::string needle = simple_lowercase(query);
  if (needle.empty()) throw UsageError("timeseries query must be non-empty");
  std::map<int, GenderCounts> by_year;
  for (const auto& [key, counts] : store.entries()) {
    if (key.role.find(needle) != std::string::npos) by_year[key.year] += counts;
  }
  std::vector<YearGenderRow> out;
  for (const auto& [year, counts] : by_year) out.push_back({year, counts});
  return out;
}

std::string_view bin_name(GenderBin bin) noexcept {
  switch (bin) {
    case GenderBin::StronglyMale: return "strongly-male";
    case GenderBin::ModeratelyMale: return "moderately-male";
    case GenderBin::Neutral: return "neutral";
    case GenderBin::ModeratelyFemale: return "moderately-female";
    case GenderBin::StronglyFemale: return "strongly-female";
  }
  return "?";
}

std::array<std::vector<BinnedRole>, kBinCount> partition_roles(
    const AggregateStore& store, std::uint64_t min_count,
    const std::set<std::string>& exclude_names) {
  std::vector<BinnedRole> eligible;
  for (const auto& [role, counts] : all_year_totals(store)) {
    if (counts.total() <= min_count || exclude_names.contains(role)) continue;
    eligible.push_back({role, counts, *counts.female_share(), GenderBin::Neutral});
  }
  if (eligible.size() < kBinCount) {
    throw UsageError("binning needs at least 5 eligible roles (count > " +
                     std::to_string(min_count) + "), found " +
                     std::to_string(eligible.size()));
  }
  std::sort(eligible.begin(), eligible.end(), less_by_share);

  std::array<std::vector<BinnedRole>, kBinCount> bins;
  const std::size_t base = eligible.size() / kBinCount;
  const std::size_t extra = eligible.size() % kBinCount;
  auto it = eligible.begin();
  for (std::size_t b = 0; b < kBinCount; ++b) {
    const auto size = static_cast<std::ptrdiff_t>(base + (b < extra ? 1 : 0));
    for (auto end = it + size; it != end; ++it) {
      it->bin = static_cast<GenderBin>(b);
      bins[b].push_back(std::move(*it));
    }
  }
  return bins;
}

std::vector<BinnedRole> bin_roles(const AggregateStore& store,
                                  std::uint64_t min_count,
                                  const std::set<std::string>& exclude_names,
                                  std::uint64_t seed,
                                  std::size_t samples_per_bin) {
  auto bins = partition_roles(store, min_count, exclude_names);
  std::mt19937_64 rng(seed);
  std::vector<BinnedRole> out;
  for (auto& members : bins) {
    const std::size_t take = std::min(samples_per_bin, members.size());
    // Partial Fisher-Yates: the first `take` slots become the sample.
    for (std::size_t i = 0; i < take; ++i) {
      const auto j = i + uniform_below(rng, members.size() - i);
      std::swap(members[i], members[j]);
    }
    std::sort(members.begin(), members.begin() + static_cast<std::ptrdiff_t>(take),
              less_by_share);
    std::move(members.begin(),
              members.begin() + static_cast<std::ptrdiff_t>(take),
              std::back_inserter(out));
  }
  return out;
}

std::string_view match_mode_name(MatchMode mode) noexcept {
  switch (mode) {
    case MatchMode::Substring: return "substring";
    case MatchMode::Exact: return "exact";
    case MatchMode::SubstringNotSuffix: return "substring-not-suffix";
  }
  return "?";
}

std::optional<MatchMode> parse_match_mode(std::string_view text) noexcept {
  if (text == "substring") return MatchMode::Substring;
  if (text == "exact") return MatchMode::Exact;
  if (text == "substring-not-suffix") return MatchMode::SubstringNotSuffix;
  return std::nullopt;
}

bool Keyword::matches(std::string_view role) const noexcept {
  switch (mode) {
    case MatchMode::Substring:
      return role.find(text) != std::string_view::npos;
    case MatchMode::Exact:
      return role == text;
    case MatchMode::SubstringNotSuffix:
      // Mentions ending with the keyword are mostly surnames ("mr. bishop").
      return role == text || (role.find(text) != std::string_view::npos &&
                              !role.ends_with(text));
  }
  return false;
}

bool ProfessionGroup::matches(std::string_view role) const noexcept {
  return std::any_of(keywords.begin(), keywords.end(),
                     [&](const Keyword& kw) { return kw.matches(role); });
}

MatchTotals profession_stats(const AggregateStore& store,
                             const ProfessionGroup& group) {
  MatchTotals totals;
  for (const auto& [key, counts] : store.entries()) {
    if (group.matches(key.role)) totals.counts += counts;
  }
  return totals;
}

}  // namespace rolestat
