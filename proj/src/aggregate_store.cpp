#include "rolestat/aggregate_store.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "rolestat/csv.hpp"
#include "rolestat/errors.hpp"
#include "rolestat/file_io.hpp"
#include "rolestat/role_normalizer.hpp"

namespace rolestat {
namespace {

constexpr std::string_view kSnapshotHeader = "role,year,count_f,count_m";

bool year_in_range(int year) {
  return year >= kFirstRetainedYear && year <= kLastRetainedYear;
}

template <typename T>
std::optional<T> parse_number(std::string_view text) {
  T value{};
  if (text.empty()) return std::nullopt;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

}  // namespace

void AggregateStore::ingest(const RoleRecord& record) {
  if (record.role.empty()) throw UsageError("ingest: empty role");
  if (!year_in_range(record.year)) {
    throw UsageError("ingest: year " + std::to_string(record.year) +
                     " outside retained range");
  }
  auto& counts = entries_[RoleYearKey{record.role, record.year}];
  if (record.gender == Gender::Female) {
    ++counts.female;
  } else {
    ++counts.male;
  }
  ++total_records_;
}

void AggregateStore::add(const RoleYearKey& key, const GenderCounts& counts) {
  if (counts.total() == 0) return;
  entries_[key] += counts;
  total_records_ += counts.total();
}

void AggregateStore::merge(const AggregateStore& other) {
  for (const auto& [key, counts] : other.entries_) entries_[key] += counts;
  total_records_ += other.total_records_;
}

AggregateStore merge(const AggregateStore& a, const AggregateStore& b) {
  AggregateStore out = a;
  out.merge(b);
  return out;
}

std::optional<GenderCounts> AggregateStore::counts(std::string_view role,
                                                   int year) const {
  const auto it = entries_.find(RoleYearKey{std::string(role), year});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::optional<double> AggregateStore::gender_distribution(std::string_view role,
                                                          int year) const {
  const auto c = counts(role, year);
  if (!c) return std::nullopt;
  return c->female_share()->value();
}

std::vector<AggregateStore::Entry> AggregateStore::sorted_entries() const {
  std::vector<Entry> out;
  out.reserve(entries_.size());
  for (const auto& [key, counts] : entries_) out.emplace_back(&key, counts);
  std::sort(out.begin(), out.end(),
            [](const Entry& a, const Entry& b) { return *a.first < *b.first; });
  return out;
}

std::size_t ingest_appearance(AggregateStore& store,
                              const RawAppearance& appearance) {
  if (!appearance.raw_role || !appearance.year) return 0;
  const auto roles = clean_role(*appearance.raw_role);
  for (const auto& role : roles) {
    store.ingest(RoleRecord{role, *appearance.year, appearance.gender});
  }
  return roles.size();
}

void save_snapshot(const AggregateStore& store, std::ostream& out) {
  out << kSnapshotHeader << '\n';
  for (const auto& [key, counts] : store.sorted_entries()) {
    out << csv_field(key->role) << ',' << key->year << ',' << counts.female
        << ',' << counts.male << '\n';
  }
  if (!out) throw IoError("write failure while saving snapshot");
}

AggregateStore load_snapshot(std::istream& in) {
  CsvReader reader(in);
  std::vector<std::string> fields;
  if (!reader.next(fields)) throw FormatError("empty snapshot: missing header", 1);
  if (fields.size() != 4 || fields[0] != "role" || fields[1] != "year" ||
      fields[2] != "count_f" || fields[3] != "count_m") {
    throw FormatError("bad snapshot header, expected '" +
                          std::string(kSnapshotHeader) + "'",
                      reader.line());
  }

  AggregateStore store;
  while (reader.next(fields)) {
    const auto line = reader.line();
    if (fields.size() != 4) {
      throw FormatError("expected 4 fields, got " + std::to_string(fields.size()),
                        line);
    }
    if (fields[0].empty()) throw FormatError("empty role", line);
    const auto year = parse_number<int>(fields[1]);
    if (!year || !year_in_range(*year)) {
      throw FormatError("bad year '" + fields[1] + "'", line);
    }
    const auto female = parse_number<std::uint64_t>(fields[2]);
    const auto male = parse_number<std::uint64_t>(fields[3]);
    if (!female || !male) throw FormatError("bad count", line);
    if (*female + *male == 0) throw FormatError("row with zero counts", line);
    RoleYearKey key{fields[0], *year};
    if (store.counts(key.role, key.year)) {
      throw FormatError("duplicate key '" + key.role + "'," + fields[1], line);
    }
    store.add(key, GenderCounts{*female, *male});
  }
  return store;
}

void save_snapshot_file(const AggregateStore& store,
                        const std::filesystem::path& path) {
  std::ostringstream buf;
  save_snapshot(store, buf);
  write_file_atomic(path, buf.str());
}

AggregateStore load_snapshot_file(const std::filesystem::path& path) {
  auto in = open_input_file(path);
  try {
    return load_snapshot(in);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

}  // namespace rolestat
