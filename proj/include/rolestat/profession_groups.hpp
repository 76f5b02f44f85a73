#pragma once

#include <filesystem>
#include <istream>
#include <string_view>
#include <vector>

#include "rolestat/trend_analytics.hpp"

namespace rolestat {

// Profession group config, CSV with header "name,keywords". The keywords
// field is a ';'-separated list of "keyword:mode" items, mode one of
// substring | exact | substring-not-suffix. Keywords are lower-cased on load.
//
//   name,keywords
//   Law,prosecutor:substring;lawyer:substring
std::vector<ProfessionGroup> parse_profession_groups(std::istream& in);
std::vector<ProfessionGroup> load_profession_groups(
    const std::filesystem::path& path);

// The built-in groups (IT, Doctor, Corporate, Law, Politics, Science,
// Religion, Engineering), in config form.
extern const std::string_view kDefaultProfessionConfig;
std::vector<ProfessionGroup> default_profession_groups();

}  // namespace rolestat
