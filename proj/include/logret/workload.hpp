#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace logret {

enum class Severity { Debug = 0, Info = 1, Warn = 2, Error = 3 };

inline constexpr int kSeverityCount = 4;
inline constexpr std::int64_t kSecondsPerDay = 86400;

const char* severity_name(Severity s);
Severity severity_from_name(const std::string& name);

// Parameters for synthetic workload generation. Daily entry counts are
// uniform integers in [daily_min_entries, daily_max_entries]; bytes follow
// mean_entry_bytes with a per-day multiplicative jitter.
struct WorkloadSpec {
  std::int64_t horizon_days = 90;
  std::int64_t daily_min_entries = 100000;
  std::int64_t daily_max_entries = 500000;
  std::int64_t mean_entry_bytes = 150;
  double entry_size_jitter_fraction = 0.2;
  // Probability mass over {DEBUG, INFO, WARN, ERROR}, in that order.
  std::array<double, kSeverityCount> severity_weights = {0.25, 0.55, 0.15, 0.05};
  std::int64_t service_count = 8;
  std::uint64_t seed = 42;

  // Throws ConfigError naming the offending field.
  void validate() const;
};

struct LogEntry {
  std::int64_t timestamp = 0;  // seconds since the simulation epoch (day 0, second 0)
  Severity severity = Severity::Info;
  std::int64_t service_id = 0;
  std::string metadata_token;
  std::int64_t size_bytes = 1;

  bool operator==(const LogEntry&) const = default;
};

struct DayVolume {
  std::int64_t day_index = 0;
  std::uint64_t entry_count = 0;
  std::uint64_t total_bytes = 0;

  bool operator==(const DayVolume&) const = default;
};

// Per-day entry counts and byte totals, contiguous from day 0. This is the
// sufficient statistic for every cost metric; entries are only materialized
// on demand.
struct DailyVolumeProfile {
  std::vector<DayVolume> days;

  std::int64_t horizon_days() const { return static_cast<std::int64_t>(days.size()); }
  bool operator==(const DailyVolumeProfile&) const = default;
};

struct VolumeTotals {
  std::uint64_t entries = 0;
  std::uint64_t bytes = 0;

  bool operator==(const VolumeTotals&) const = default;
};

// Draws one day's volume. Shared by the parallel kernel and the serial
// reference; deterministic in (spec, day_index) alone.
DayVolume sample_day_volume(const WorkloadSpec& spec, std::int64_t day_index);

// Builds the full profile, one independent stream per day. Parallelized with
// OpenMP when available; output is identical either way.
DailyVolumeProfile sample_daily_volumes(const WorkloadSpec& spec);

// Materializes one day's entries, sorted by timestamp (ties broken by draw
// ordinal). Deterministic in (spec, day_index, target_count).
std::vector<LogEntry> generate_entries(const WorkloadSpec& spec, std::int64_t day_index,
                                       std::int64_t target_count);

// Draws the entry for one (day, ordinal) slot, before the within-day sort.
LogEntry generate_entry_at(const WorkloadSpec& spec, std::int64_t day_index,
                           std::int64_t ordinal);

VolumeTotals total_volume(const DailyVolumeProfile& profile);

}  // namespace logret
