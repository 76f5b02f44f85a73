#include "rolestat/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <future>
#include <optional>
#include <set>
#include <sstream>
#include <variant>

#include "rolestat/aggregate_store.hpp"
#include "rolestat/census_compare.hpp"
#include "rolestat/csv.hpp"
#include "rolestat/errors.hpp"
#include "rolestat/file_io.hpp"
#include "rolestat/listfile_parser.hpp"
#include "rolestat/profession_groups.hpp"
#include "rolestat/role_normalizer.hpp"
#include "rolestat/trend_analytics.hpp"

namespace rolestat::cli {
namespace {

constexpr int kDefaultYearCap = 2014;

// Cell kinds: null, integer, text, and a fixed-point number already rendered
// with four decimals.
struct Fixed {
  std::string text;
};
using Cell = std::variant<std::monostate, std::int64_t, std::string, Fixed, bool>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

Cell share_cell(const std::optional<Proportion>& p) {
  if (!p) return std::monostate{};
  return Fixed{format_fixed4(*p)};
}

Cell count_cell(std::uint64_t n) { return static_cast<std::int64_t>(n); }

std::string cell_text(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(const Fixed& f) const { return f.text; }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
  };
  return std::visit(Visitor{}, cell);
}

std::string render(const Table& table, const std::string& format) {
  if (format == "json") {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
      nlohmann::ordered_json obj = nlohmann::ordered_json::object();
      for (std::size_t i = 0; i < table.columns.size(); ++i) {
        const auto& cell = row[i];
        auto& slot = obj[table.columns[i]];
        if (std::holds_alternative<std::monostate>(cell)) {
          slot = nullptr;
        } else if (const auto* v = std::get_if<std::int64_t>(&cell)) {
          slot = *v;
        } else if (const auto* s = std::get_if<std::string>(&cell)) {
          slot = *s;
        } else if (const auto* f = std::get_if<Fixed>(&cell)) {
          slot = std::stod(f->text);
        } else {
          slot = std::get<bool>(cell);
        }
      }
      rows.push_back(std::move(obj));
    }
    return rows.dump(2) + "\n";
  }

  const char delim = format == "tsv" ? '\t' : ',';
  std::string out;
  const auto emit = [&](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i > 0) out.push_back(delim);
      out += csv_field(fields[i], delim);
    }
    out.push_back('\n');
  };
  emit(table.columns);
  for (const auto& row : table.rows) {
    std::vector<std::string> fields;
    fields.reserve(row.size());
    for (const auto& cell : row) fields.push_back(cell_text(cell));
    emit(fields);
  }
  return out;
}

// Flags shared by the analytics subcommands.
struct CommonOptions {
  std::string snapshot;
  std::string format = "csv";
  std::string out = "-";
  int year_cap = kDefaultYearCap;
};

void add_common(CLI::App& sub, CommonOptions& opts) {
  sub.add_option("--snapshot", opts.snapshot, "Snapshot CSV written by 'build'")
      ->required();
  sub.add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"csv", "tsv", "json"}))
      ->capture_default_str();
  sub.add_option("--out", opts.out, "Output file, '-' for standard output")
      ->capture_default_str();
  sub.add_option("--year-cap", opts.year_cap,
                 "Last year shown by time-series output (gender, timeseries)")
      ->capture_default_str();
}

void emit(const Table& table, const CommonOptions& opts, std::ostream& out) {
  const std::string text = render(table, opts.format);
  if (opts.out == "-") {
    out << text;
    out.flush();
  } else {
    write_file_atomic(opts.out, text);
  }
}

std::vector<PeriodSpec> periods_from(const std::vector<std::string>& specs) {
  if (specs.empty()) return default_periods();
  std::vector<PeriodSpec> out;
  for (const auto& s : specs) out.push_back(PeriodSpec::parse(s));
  return out;
}

Table ranked_period_table(
    const std::vector<PeriodSpec>& periods,
    const std::function<std::vector<RankedRole>(const PeriodSpec&)>& fn) {
  Table t{{"period_start", "period_end", "rank", "role", "count"}, {}};
  for (const auto& p : periods) {
    for (const auto& r : fn(p)) {
      t.rows.push_back({std::int64_t{p.start}, std::int64_t{p.end},
                        std::int64_t{r.rank}, r.role, count_cell(r.count)});
    }
  }
  return t;
}

void year_rows(Table& t, const std::vector<YearGenderRow>& rows, int year_cap,
               const std::optional<std::string>& label) {
  for (const auto& r : rows) {
    if (r.year > year_cap) continue;
    std::vector<Cell> row;
    if (label) row.emplace_back(*label);
    row.emplace_back(std::int64_t{r.year});
    row.push_back(count_cell(r.counts.female));
    row.push_back(count_cell(r.counts.male));
    row.push_back(share_cell(r.female_share()));
    t.rows.push_back(std::move(row));
  }
}

std::set<std::string> load_name_list(const std::string& path) {
  std::set<std::string> names;
  if (path.empty()) return names;
  auto in = open_input_file(path);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t");
    names.insert(simple_lowercase(latin1_to_utf8(line.substr(first, last - first + 1))));
  }
  if (in.bad()) throw IoError("read failure on '" + path + "'");
  return names;
}

void check_year_cap(int year_cap) {
  if (year_cap > kLastRetainedYear) {
    throw UsageError("--year-cap must be <= " + std::to_string(kLastRetainedYear));
  }
}

int run_build(const std::string& actors, const std::string& actresses,
              const std::string& out_path, std::ostream& err) {
  auto actors_in = open_input_file(actors);
  auto actresses_in = open_input_file(actresses);

  const auto parse_one = [](std::ifstream& in, Gender gender) {
    AggregateStore shard;
    ParseReport report = parse_list_stream(
        in, gender, [&](RawAppearance&& rec) { ingest_appearance(shard, rec); });
    return std::make_pair(std::move(shard), report);
  };
  const auto with_path = [](const std::string& path, auto&& fn) {
    try {
      return fn();
    } catch (const FormatError& e) {
      throw FormatError(path + ": " + e.what());
    } catch (const IoError& e) {
      throw IoError(path + ": " + e.what());
    }
  };

  auto female = std::async(std::launch::async, [&] {
    return with_path(actresses, [&] { return parse_one(actresses_in, Gender::Female); });
  });
  auto male = with_path(actors, [&] { return parse_one(actors_in, Gender::Male); });
  auto female_result = female.get();

  AggregateStore store = std::move(male.first);
  store.merge(female_result.first);
  save_snapshot_file(store, out_path);

  const auto print = [&](const char* label, const ParseReport& r) {
    err << label << ": title_lines=" << r.title_lines()
        << " emitted=" << r.records_emitted
        << " skipped_malformed=" << r.lines_skipped_malformed
        << " excluded_alternative_name=" << r.records_excluded_alternative_name
        << " excluded_no_year=" << r.records_excluded_no_year << '\n';
  };
  print("actors", male.second);
  print("actresses", female_result.second);
  err << "role_keys=" << store.size() << " total_records=" << store.total_records()
      << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Role and gender statistics from cast-list dump files", "rolestat"};
  app.require_subcommand(1);

  // build
  std::string actors, actresses, build_out;
  auto* build = app.add_subcommand(
      "build", "Parse actors/actresses list files into a snapshot CSV");
  build->add_option("--actors", actors, "actors.list[.gz]")->required();
  build->add_option("--actresses", actresses, "actresses.list[.gz]")->required();
  build->add_option("--out", build_out, "Snapshot CSV to write")->required();

  // top
  CommonOptions top_opts;
  std::vector<std::string> top_periods;
  int top_k = 10;
  std::string top_gender;
  auto* top = app.add_subcommand(
      "top", "Most frequent roles per period, or per gender over all years");
  add_common(*top, top_opts);
  auto* top_period_opt = top->add_option(
      "--period", top_periods,
      "START:END half-open year window; repeatable (default: 20-year windows "
      "1900-2020)");
  top->add_option("--k", top_k, "Roles per table")->capture_default_str();
  auto* top_gender_opt = top->add_option(
      "--by-gender", top_gender, "F or M: rank one gender's counts over all years");
  top_gender_opt->check(CLI::IsMember({"F", "M"}));
  top_gender_opt->excludes(top_period_opt);

  // emerging
  CommonOptions em_opts;
  std::vector<std::string> em_periods;
  int em_k = 10;
  int em_prev = 50;
  auto* emerging = app.add_subcommand(
      "emerging", "Top roles absent from the previous period's top list");
  add_common(*emerging, em_opts);
  emerging->add_option("--period", em_periods,
                       "START:END half-open year window; repeatable (default: "
                       "20-year windows 1900-2020)");
  emerging->add_option("--k", em_k, "Roles per table")->capture_default_str();
  emerging->add_option("--prev-window", em_prev,
                       "Size of the previous period's excluded top list")
      ->capture_default_str();

  // gender
  CommonOptions gender_opts;
  auto* gender = app.add_subcommand("gender", "Yearly female/male counts and p(F)");
  add_common(*gender, gender_opts);

  // bins
  CommonOptions bins_opts;
  std::uint64_t min_count = 1000;
  std::string exclude_path;
  std::uint64_t seed = 0;
  std::size_t samples = 10;
  auto* bins = app.add_subcommand(
      "bins", "Five p(F) bins over common roles, sampled per bin");
  add_common(*bins, bins_opts);
  bins->add_option("--min-count", min_count,
                   "Keep roles whose all-years count is strictly above this")
      ->capture_default_str();
  bins->add_option("--exclude-names", exclude_path,
                   "File with one name per line to leave out (e.g. census first "
                   "names)");
  bins->add_option("--seed", seed, "Sampling seed")->capture_default_str();
  bins->add_option("--samples", samples, "Roles sampled from each bin")
      ->capture_default_str();

  // professions
  CommonOptions prof_opts;
  std::string groups_path;
  auto* professions = app.add_subcommand(
      "professions", "Pooled p(F) for keyword-defined profession groups");
  add_common(*professions, prof_opts);
  professions->add_option("--groups", groups_path,
                          "Profession config CSV (default: built-in groups)");

  // timeseries
  CommonOptions ts_opts;
  std::vector<std::string> queries;
  auto* timeseries = app.add_subcommand(
      "timeseries", "Yearly counts for roles containing a query string");
  add_common(*timeseries, ts_opts);
  timeseries->add_option("--query", queries, "Substring to match; repeatable")
      ->required();

  // census
  CommonOptions census_opts;
  std::string census_path, mapping_path;
  auto* census = app.add_subcommand(
      "census", "Onscreen p(F) against census female share per occupation");
  add_common(*census, census_opts);
  census->add_option("--census", census_path, "CSV occupation,percent_female")
      ->required();
  census->add_option("--mapping", mapping_path, "CSV occupation,query,mode")
      ->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*build) return run_build(actors, actresses, build_out, err);

    const auto run_table = [&](const CommonOptions& opts, auto&& make) {
      check_year_cap(opts.year_cap);
      const auto store = load_snapshot_file(opts.snapshot);
      emit(make(store, opts), opts, out);
      return kExitOk;
    };

    if (*top) {
      return run_table(top_opts, [&](const AggregateStore& store, const CommonOptions&) {
        if (!top_gender.empty()) {
          Table t{{"gender", "rank", "role", "count"}, {}};
          const auto g = *parse_gender(top_gender);
          for (const auto& r : top_roles_by_gender(store, g, top_k)) {
            t.rows.push_back({top_gender, std::int64_t{r.rank}, r.role,
                              count_cell(r.count)});
          }
          return t;
        }
        return ranked_period_table(periods_from(top_periods),
                                   [&](const PeriodSpec& p) {
                                     return top_roles(store, p, top_k);
                                   });
      });
    }
    if (*emerging) {
      return run_table(em_opts, [&](const AggregateStore& store, const CommonOptions&) {
        return ranked_period_table(periods_from(em_periods),
                                   [&](const PeriodSpec& p) {
                                     return emerging_roles(store, p, em_k, em_prev);
                                   });
      });
    }
    if (*gender) {
      return run_table(gender_opts, [&](const AggregateStore& store,
                                        const CommonOptions& opts) {
        Table t{{"year", "count_f", "count_m", "p_f"}, {}};
        year_rows(t, gender_totals_by_year(store), opts.year_cap, std::nullopt);
        return t;
      });
    }
    if (*bins) {
      const auto names = load_name_list(exclude_path);
      return run_table(bins_opts, [&](const AggregateStore& store, const CommonOptions&) {
        Table t{{"bin", "role", "count_f", "count_m", "p_f"}, {}};
        for (const auto& r : bin_roles(store, min_count, names, seed, samples)) {
          t.rows.push_back({std::string(bin_name(r.bin)), r.role,
                            count_cell(r.counts.female), count_cell(r.counts.male),
                            share_cell(r.female_share)});
        }
        return t;
      });
    }
    if (*professions) {
      const auto groups = groups_path.empty() ? default_profession_groups()
                                              : load_profession_groups(groups_path);
      return run_table(prof_opts, [&](const AggregateStore& store, const CommonOptions&) {
        Table t{{"profession", "count_f", "count_m", "p_f"}, {}};
        for (const auto& g : groups) {
          const auto totals = profession_stats(store, g);
          t.rows.push_back({g.name, count_cell(totals.counts.female),
                            count_cell(totals.counts.male),
                            share_cell(totals.female_share())});
        }
        return t;
      });
    }
    if (*timeseries) {
      return run_table(ts_opts, [&](const AggregateStore& store,
                                    const CommonOptions& opts) {
        Table t{{"query", "year", "count_f", "count_m", "p_f"}, {}};
        for (const auto& q : queries) {
          year_rows(t, role_timeseries(store, q), opts.year_cap, simple_lowercase(q));
        }
        return t;
      });
    }
    if (*census) {
      const auto occupations = load_census(census_path, mapping_path);
      return run_table(census_opts, [&](const AggregateStore& store, const CommonOptions&) {
        Table t{{"occupation", "census_p_f", "onscreen_p_f", "delta", "count_f",
                 "count_m", "matched"},
                {}};
        for (const auto& row : compare(store, occupations)) {
          t.rows.push_back(
              {row.occupation, Fixed{format_fixed4(row.census_share)},
               share_cell(row.onscreen_share),
               row.delta ? Cell{Fixed{format_fixed4(*row.delta)}} : Cell{},
               count_cell(row.onscreen_counts.female),
               count_cell(row.onscreen_counts.male), !row.no_match()});
        }
        return t;
      });
    }
  } catch (const UsageError& e) {
    err << "rolestat: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FormatError& e) {
    err << "rolestat: format error: " << e.what() << '\n';
    return kExitFormat;
  } catch (const IoError& e) {
    err << "rolestat: I/O error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}

}  // namespace rolestat::cli
