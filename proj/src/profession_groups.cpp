#include "rolestat/profession_groups.hpp"

#include <sstream>

#include "rolestat/csv.hpp"
#include "rolestat/errors.hpp"
#include "rolestat/file_io.hpp"
#include "rolestat/role_normalizer.hpp"

namespace rolestat {

// Same content as data/professions.csv.
const std::string_view kDefaultProfessionConfig =
    "name,keywords\n"
    "IT,software:substring;computer:substring;hacker:substring\n"
    "Doctor,medical:substring;dr:substring;dr.:substring;doctor:substring;md:substring;physician:substring\n"
    "Corporate,corporate:substring;ceo:substring;coo:substring\n"
    "Law,prosecutor:substring;lawyer:substring\n"
    "Politics,minister:substring;dictator:substring;parlament:substring;senator:substring;president:exact\n"
    "Science,science:substring;professor:substring\n"
    "Religion,priest:substring;priestess:substring;reverend:substring;pastor:substring;prior:substring;allamah:substring;imam:substring;rabbi:substring;guru:substring;lama:substring;bishop:substring-not-suffix;ayatollah:substring;swami:substring\n"
    "Engineering,engineer:substring\n"
    ;

std::vector<ProfessionGroup> parse_profession_groups(std::istream& in) {
  CsvReader reader(in);
  std::vector<std::string> fields;
  if (!reader.next(fields) || fields.size() != 2 || fields[0] != "name" ||
      fields[1] != "keywords") {
    throw FormatError("profession config must start with 'name,keywords'", 1);
  }

  std::vector<ProfessionGroup> groups;
  while (reader.next(fields)) {
    const auto line = reader.line();
    if (fields.size() == 1 && fields[0].empty()) continue;
    if (fields.size() != 2) throw FormatError("expected 2 fields", line);
    if (fields[0].empty()) throw FormatError("empty group name", line);

    ProfessionGroup group{fields[0], {}};
    std::string_view rest = fields[1];
    while (!rest.empty()) {
      const auto semi = rest.find(';');
      const std::string_view item = rest.substr(0, semi);
      rest = semi == std::string_view::npos ? std::string_view{}
                                            : rest.substr(semi + 1);
      const auto colon = item.rfind(':');
      if (colon == std::string_view::npos || colon == 0) {
        throw FormatError("keyword '" + std::string(item) +
                              "' must be written keyword:mode",
                          line);
      }
      const auto mode = parse_match_mode(item.substr(colon + 1));
      if (!mode) {
        throw FormatError("unknown match mode '" +
                              std::string(item.substr(colon + 1)) + "'",
                          line);
      }
      group.keywords.push_back({simple_lowercase(item.substr(0, colon)), *mode});
    }
    if (group.keywords.empty()) {
      throw FormatError("group '" + group.name + "' has no keywords", line);
    }
    groups.push_back(std::move(group));
  }
  return groups;
}

std::vector<ProfessionGroup> load_profession_groups(
    const std::filesystem::path& path) {
  auto in = open_input_file(path);
  try {
    return parse_profession_groups(in);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

std::vector<ProfessionGroup> default_profession_groups() {
  std::istringstream in{std::string(kDefaultProfessionConfig)};
  return parse_profession_groups(in);
}

}  // namespace rolestat
