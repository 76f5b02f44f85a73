#pragma once

#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "rolestat/aggregate_store.hpp"
#include "rolestat/trend_analytics.hpp"

namespace rolestat {

// A census occupation paired with the role query that stands in for it
// onscreen.
struct CensusOccupation {
  std::string occupation;
  double female_share = 0.0;  // [0, 1]
  std::string query;          // lower-case, non-empty
  MatchMode query_mode = MatchMode::Substring;
};

struct CensusComparison {
  std::string occupation;
  GenderCounts onscreen_counts;
  std::optional<Proportion> onscreen_share;  // absent: no role matched
  double census_share = 0.0;
  std::optional<double> delta;  // onscreen - census

  bool no_match() const noexcept { return !onscreen_share.has_value(); }
};

// One row per occupation, in input order. Throws UsageError when
// `occupations` is empty.
std::vector<CensusComparison> compare(
    const AggregateStore& store, const std::vector<CensusOccupation>& occupations);

struct CensusRow {
  std::string occupation;
  double female_share = 0.0;
};

struct MappingRow {
  std::string occupation;
  std::string query;
  MatchMode mode = MatchMode::Substring;
  std::size_t line = 0;  // source line, for error messages
};

// CSV "occupation,percent_female", percent in [0, 100]. FormatError carries
// the offending line.
std::vector<CensusRow> parse_census_table(std::istream& in);

// CSV "occupation,query,mode", mode substring | exact.
std::vector<MappingRow> parse_census_mapping(std::istream& in);

// Mapped occupations in census-table order. Census rows without a mapping
// are skipped; a mapping naming an unknown occupation is a FormatError.
std::vector<CensusOccupation> join_census(const std::vector<CensusRow>& census,
                                          const std::vector<MappingRow>& mapping);

std::vector<CensusOccupation> load_census(
    const std::filesystem::path& census_csv,
    const std::filesystem::path& mapping_csv);

}  // namespace rolestat
