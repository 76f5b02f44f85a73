#pragma once

#include <compare>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rolestat/gender.hpp"
#include "rolestat/listfile_parser.hpp"
#include "rolestat/proportion.hpp"

namespace rolestat {

// One cleaned appearance.
struct RoleRecord {
  std::string role;
  int year = 0;
  Gender gender = Gender::Male;
};

struct RoleYearKey {
  std::string role;
  int year = 0;

  auto operator<=>(const RoleYearKey&) const = default;
};

struct RoleYearKeyHash {
  std::size_t operator()(const RoleYearKey& key) const noexcept {
    const std::size_t h = std::hash<std::string>{}(key.role);
    return h ^ (static_cast<std::size_t>(key.year) * 0x9E3779B97F4A7C15ull);
  }
};

struct GenderCounts {
  std::uint64_t female = 0;
  std::uint64_t male = 0;

  std::uint64_t total() const noexcept { return female + male; }

  std::uint64_t of(Gender g) const noexcept {
    return g == Gender::Female ? female : male;
  }

  // p(F); nullopt for an empty pair. p(M) is its complement.
  std::optional<Proportion> female_share() const noexcept {
    if (total() == 0) return std::nullopt;
    return Proportion{female, total()};
  }

  GenderCounts& operator+=(const GenderCounts& other) noexcept {
    female += other.female;
    male += other.male;
    return *this;
  }

  bool operator==(const GenderCounts&) const = default;
};

// (role, year) -> per-gender counts. Single writer; concurrent readers are
// fine once ingestion is over. Parallel builds use one store per shard and
// merge().
class AggregateStore {
 public:
  using Map = std::unordered_map<RoleYearKey, GenderCounts, RoleYearKeyHash>;
  using Entry = std::pair<const RoleYearKey*, GenderCounts>;

  // Throws UsageError when the role is empty or the year is outside
  // [kFirstRetainedYear, kLastRetainedYear].
  void ingest(const RoleRecord& record);

  // Adds a whole count pair for one key (snapshot loading, merging).
  void add(const RoleYearKey& key, const GenderCounts& counts);

  void merge(const AggregateStore& other);

  std::optional<GenderCounts> counts(std::string_view role, int year) const;

  // p(F|role, year) as a double; nullopt for unseen keys.
  std::optional<double> gender_distribution(std::string_view role,
                                            int year) const;

  const Map& entries() const noexcept { return entries_; }

  // Entries ordered by (role, year) ascending, bytewise on role.
  std::vector<Entry> sorted_entries() const;

  std::uint64_t total_records() const noexcept { return total_records_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  bool operator==(const AggregateStore& other) const {
    return total_records_ == other.total_records_ && entries_ == other.entries_;
  }

 private:
  Map entries_;
  std::uint64_t total_records_ = 0;
};

AggregateStore merge(const AggregateStore& a, const AggregateStore& b);

// Cleans the appearance's role and ingests one record per normalized role.
// Returns the number of records added (0 when there is no role or it was
// filtered out).
std::size_t ingest_appearance(AggregateStore& store,
                              const RawAppearance& appearance);

// Snapshot CSV: header "role,year,count_f,count_m", rows sorted by
// (role, year), role quoted when needed.
void save_snapshot(const AggregateStore& store, std::ostream& out);
AggregateStore load_snapshot(std::istream& in);

// File variants. Saving writes to a sibling temp file and renames it into
// place, so a failed save never leaves a partial snapshot.
void save_snapshot_file(const AggregateStore& store,
                        const std::filesystem::path& path);
AggregateStore load_snapshot_file(const std::filesystem::path& path);

}  // namespace rolestat
