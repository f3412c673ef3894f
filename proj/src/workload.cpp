#include "logret/workload.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "logret/errors.hpp"
#include "logret/rng.hpp"

namespace logret {

namespace {

constexpr double kWeightSumTolerance = 1e-9;

std::string format_token(std::uint64_t bits) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(bits));
  return std::string(buf, 16);
}

Severity pick_severity(const std::array<double, kSeverityCount>& weights, double u) {
  double cumulative = 0.0;
  for (int i = 0; i < kSeverityCount; ++i) {
    cumulative += weights[i];
    if (u < cumulative) return static_cast<Severity>(i);
  }
  return Severity::Error;  // u landed in the 1e-9 slack past the last weight
}

}  // namespace

const char* severity_name(Severity s) {
  switch (s) {
    case Severity::Debug: return "DEBUG";
    case Severity::Info: return "INFO";
    case Severity::Warn: return "WARN";
    case Severity::Error: return "ERROR";
  }
  return "INFO";
}

Severity severity_from_name(const std::string& name) {
  if (name == "DEBUG") return Severity::Debug;
  if (name == "INFO") return Severity::Info;
  if (name == "WARN") return Severity::Warn;
  if (name == "ERROR") return Severity::Error;
  throw ConfigError("unknown severity name: " + name);
}

void WorkloadSpec::validate() const {
  if (horizon_days < 1) throw ConfigError("workload.horizon_days must be >= 1");
  if (daily_min_entries < 1) throw ConfigError("workload.daily_min_entries must be >= 1");
  if (daily_max_entries < daily_min_entries) {
    throw ConfigError("workload.daily_max_entries must be >= daily_min_entries");
  }
  if (mean_entry_bytes < 1) throw ConfigError("workload.mean_entry_bytes must be >= 1");
  if (entry_size_jitter_fraction < 0.0 || entry_size_jitter_fraction >= 1.0) {
    throw ConfigError("workload.entry_size_jitter_fraction must be in [0, 1)");
  }
  double sum = 0.0;
  for (double w : severity_weights) {
    if (w < 0.0) throw ConfigError("workload.severity_weights must be non-negative");
    sum += w;
  }
  if (std::abs(sum - 1.0) > kWeightSumTolerance) {
    throw ConfigError("workload.severity_weights must sum to 1");
  }
  if (service_count < 1) throw ConfigError("workload.service_count must be >= 1");
}

DayVolume sample_day_volume(const WorkloadSpec& spec, std::int64_t day_index) {
  CounterRng rng(stream_key(spec.seed, kStreamDailyVolume,
                            static_cast<std::uint64_t>(day_index)));
  // Draw order is fixed: entry count first, then the byte jitter factor.
  const std::uint64_t count =
      rng.next_in_range(static_cast<std::uint64_t>(spec.daily_min_entries),
                        static_cast<std::uint64_t>(spec.daily_max_entries));
  const double jitter = spec.entry_size_jitter_fraction;
  const double factor = (1.0 - jitter) + rng.next_unit() * (2.0 * jitter);
  const double raw = static_cast<double>(count) *
                     static_cast<double>(spec.mean_entry_bytes) * factor;
  // Entries are at least one byte each, so a day with entries never rounds
  // to zero bytes.
  const std::uint64_t bytes = std::max<std::uint64_t>(
      count, static_cast<std::uint64_t>(std::llround(raw)));
  return DayVolume{day_index, count, bytes};
}

DailyVolumeProfile sample_daily_volumes(const WorkloadSpec& spec) {
  spec.validate();
  const std::int64_t horizon = spec.horizon_days;
  DailyVolumeProfile profile;
  profile.days.resize(static_cast<std::size_t>(horizon));
#pragma omp parallel for schedule(static)
  for (std::int64_t d = 0; d < horizon; ++d) {
    profile.days[static_cast<std::size_t>(d)] = sample_day_volume(spec, d);
  }
  return profile;
}

LogEntry generate_entry_at(const WorkloadSpec& spec, std::int64_t day_index,
                           std::int64_t ordinal) {
  CounterRng rng(stream_key(spec.seed, kStreamEntry,
                            static_cast<std::uint64_t>(day_index),
                            static_cast<std::uint64_t>(ordinal)));
  // Draw order is fixed: second-of-day, severity, service, size jitter, token.
  LogEntry entry;
  entry.timestamp = day_index * kSecondsPerDay +
                    static_cast<std::int64_t>(rng.next_below(kSecondsPerDay));
  entry.severity = pick_severity(spec.severity_weights, rng.next_unit());
  entry.service_id =
      static_cast<std::int64_t>(rng.next_below(static_cast<std::uint64_t>(spec.service_count)));
  const double jitter = spec.entry_size_jitter_fraction;
  const double factor = (1.0 - jitter) + rng.next_unit() * (2.0 * jitter);
  entry.size_bytes = std::max<std::int64_t>(
      1, std::llround(static_cast<double>(spec.mean_entry_bytes) * factor));
  entry.metadata_token = format_token(rng.next_u64());
  return entry;
}

std::vector<LogEntry> generate_entries(const WorkloadSpec& spec, std::int64_t day_index,
                                       std::int64_t target_count) {
  spec.validate();
  if (day_index < 0 || day_index >= spec.horizon_days) {
    throw std::out_of_range("generate_entries: day_index out of range");
  }
  if (target_count < 0) throw ConfigError("generate_entries: target_count must be >= 0");

  std::vector<LogEntry> entries(static_cast<std::size_t>(target_count));
  std::vector<std::int64_t> order(static_cast<std::size_t>(target_count));
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < target_count; ++i) {
    entries[static_cast<std::size_t>(i)] = generate_entry_at(spec, day_index, i);
    order[static_cast<std::size_t>(i)] = i;
  }
  // Sort by timestamp with the draw ordinal as tie-break, so the result does
  // not depend on the schedule above.
  std::sort(order.begin(), order.end(), [&](std::int64_t a, std::int64_t b) {
    const auto& ea = entries[static_cast<std::size_t>(a)];
    const auto& eb = entries[static_cast<std::size_t>(b)];
    if (ea.timestamp != eb.timestamp) return ea.timestamp < eb.timestamp;
    return a < b;
  });
  std::vector<LogEntry> sorted(entries.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < target_count; ++i) {
    sorted[static_cast<std::size_t>(i)] =
        std::move(entries[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])]);
  }
  return sorted;
}

VolumeTotals total_volume(const DailyVolumeProfile& profile) {
  VolumeTotals totals;
  for (const DayVolume& day : profile.days) {
    totals.entries += day.entry_count;
    totals.bytes += day.total_bytes;
  }
  return totals;
}

}  // namespace logret
