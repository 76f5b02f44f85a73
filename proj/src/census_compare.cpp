#include "rolestat/census_compare.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <unordered_map>

#include "rolestat/csv.hpp"
#include "rolestat/errors.hpp"
#include "rolestat/file_io.hpp"
#include "rolestat/role_normalizer.hpp"

namespace rolestat {
namespace {

void expect_header(CsvReader& reader, const std::vector<std::string>& header) {
  std::vector<std::string> fields;
  std::string joined;
  for (const auto& h : header) joined += (joined.empty() ? "" : ",") + h;
  if (!reader.next(fields)) throw FormatError("missing header '" + joined + "'", 1);
  if (fields != header) {
    throw FormatError("bad header, expected '" + joined + "'", reader.line());
  }
}

bool is_blank_record(const std::vector<std::string>& fields) {
  return fields.size() == 1 && fields[0].empty();
}

}  // namespace

std::vector<CensusComparison> compare(
    const AggregateStore& store,
    const std::vector<CensusOccupation>& occupations) {
  if (occupations.empty()) throw UsageError("no census occupations to compare");
  std::vector<CensusComparison> out;
  out.reserve(occupations.size());
  for (const auto& occ : occupations) {
    const ProfessionGroup group{occ.occupation, {{occ.query, occ.query_mode}}};
    const auto totals = profession_stats(store, group);
    CensusComparison row{occ.occupation, totals.counts, totals.female_share(),
                         occ.female_share, std::nullopt};
    if (row.onscreen_share) row.delta = row.onscreen_share->value() - occ.female_share;
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<CensusRow> parse_census_table(std::istream& in) {
  CsvReader reader(in);
  expect_header(reader, {"occupation", "percent_female"});
  std::vector<CensusRow> rows;
  std::vector<std::string> fields;
  while (reader.next(fields)) {
    if (is_blank_record(fields)) continue;
    const auto line = reader.line();
    if (fields.size() != 2) throw FormatError("expected 2 fields", line);
    if (fields[0].empty()) throw FormatError("empty occupation", line);
    const std::string& text = fields[1];
    double percent = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), percent);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() ||
        !std::isfinite(percent) || percent < 0.0 || percent > 100.0) {
      throw FormatError("percent_female '" + text + "' is not a number in [0,100]",
                        line);
    }
    for (const auto& r : rows) {
      if (r.occupation == fields[0]) {
        throw FormatError("duplicate occupation '" + fields[0] + "'", line);
      }
    }
    rows.push_back({fields[0], percent / 100.0});
  }
  return rows;
}

std::vector<MappingRow> parse_census_mapping(std::istream& in) {
  CsvReader reader(in);
  expect_header(reader, {"occupation", "query", "mode"});
  std::vector<MappingRow> rows;
  std::vector<std::string> fields;
  while (reader.next(fields)) {
    if (is_blank_record(fields)) continue;
    const auto line = reader.line();
    if (fields.size() != 3) throw FormatError("expected 3 fields", line);
    if (fields[0].empty()) throw FormatError("empty occupation", line);
    std::string query = simple_lowercase(fields[1]);
    if (query.empty()) throw FormatError("empty query", line);
    const auto mode = parse_match_mode(fields[2]);
    if (!mode || *mode == MatchMode::SubstringNotSuffix) {
      throw FormatError("mode must be substring or exact, got '" + fields[2] + "'",
                        line);
    }
    rows.push_back({fields[0], std::move(query), *mode, line});
  }
  return rows;
}

std::vector<CensusOccupation> join_census(const std::vector<CensusRow>& census,
                                          const std::vector<MappingRow>& mapping) {
  std::unordered_map<std::string, const MappingRow*> by_name;
  for (const auto& m : mapping) {
    const bool known = std::any_of(census.begin(), census.end(), [&](const CensusRow& c) {
      return c.occupation == m.occupation;
    });
    if (!known) {
      throw FormatError("mapping names unknown census occupation '" +
                            m.occupation + "'",
                        m.line);
    }
    if (!by_name.emplace(m.occupation, &m).second) {
      throw FormatError("occupation '" + m.occupation + "' mapped twice", m.line);
    }
  }
  std::vector<CensusOccupation> out;
  for (const auto& c : census) {
    const auto it = by_name.find(c.occupation);
    if (it == by_name.end()) continue;
    out.push_back({c.occupation, c.female_share, it->second->query,
                   it->second->mode});
  }
  return out;
}

std::vector<CensusOccupation> load_census(
    const std::filesystem::path& census_csv,
    const std::filesystem::path& mapping_csv) {
  const auto parse_file = [](const std::filesystem::path& path, auto parse) {
    auto in = open_input_file(path);
    try {
      return parse(in);
    } catch (const FormatError& e) {
      throw FormatError(path.string() + ": " + e.what());
    }
  };
  const auto census = parse_file(census_csv, parse_census_table);
  const auto mapping = parse_file(mapping_csv, parse_census_mapping);
  try {
    return join_census(census, mapping);
  } catch (const FormatError& e) {
    throw FormatError(mapping_csv.string() + ": " + e.what());
  }
}

}  // namespace rolestat
