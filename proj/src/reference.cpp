#include "logret/reference.hpp"

#include <algorithm>
#include <stdexcept>

#include "logret/errors.hpp"

namespace logret::reference {

DailyVolumeProfile sample_daily_volumes(const WorkloadSpec& spec) {
  spec.validate();
  DailyVolumeProfile profile;
  profile.days.reserve(static_cast<std::size_t>(spec.horizon_days));
  for (std::int64_t d = 0; d < spec.horizon_days; ++d) {
    profile.days.push_back(sample_day_volume(spec, d));
  }
  return profile;
}

DailyVolumeProfile sample_daily_volumes_ordered(const WorkloadSpec& spec,
                                                std::span<const std::int64_t> day_order) {
  spec.validate();
  if (static_cast<std::int64_t>(day_order.size()) != spec.horizon_days) {
    throw ConfigError("day_order must cover every day exactly once");
  }
  DailyVolumeProfile profile;
  profile.days.resize(static_cast<std::size_t>(spec.horizon_days));
  for (std::int64_t d : day_order) {
    if (d < 0 || d >= spec.horizon_days) throw std::out_of_range("day_order entry out of range");
    profile.days[static_cast<std::size_t>(d)] = sample_day_volume(spec, d);
  }
  return profile;
}

std::vector<LogEntry> generate_entries(const WorkloadSpec& spec, std::int64_t day_index,
                                       std::int64_t target_count) {
  spec.validate();
  if (day_index < 0 || day_index >= spec.horizon_days) {
    throw std::out_of_range("generate_entries: day_index out of range");
  }
  if (target_count < 0) throw ConfigError("generate_entries: target_count must be >= 0");
  std::vector<LogEntry> entries;
  entries.reserve(static_cast<std::size_t>(target_count));
  for (std::int64_t i = 0; i < target_count; ++i) {
    entries.push_back(generate_entry_at(spec, day_index, i));
  }
  std::stable_sort(entries.begin(), entries.end(), [](const LogEntry& a, const LogEntry& b) {
    return a.timestamp < b.timestamp;
  });
  return entries;
}

QueryWorkload sample_queries(const AccessDistribution& dist, std::int64_t count,
                             std::uint64_t seed, double span_days) {
  dist.validate();
  if (count < 0) throw ConfigError("sample_queries: count must be >= 0");
  if (span_days < 0.0) throw ConfigError("sample_queries: span_days must be >= 0");
  QueryWorkload workload;
  workload.seed = seed;
  workload.distribution_name = dist.name;
  workload.queries.reserve(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) {
    workload.queries.push_back(sample_query_at(dist, seed, i, span_days));
  }
  return workload;
}

std::int64_t satisfied_count(const QueryWorkload& workload, const RetentionPolicy& policy) {
  policy.validate();
  std::int64_t satisfied = 0;
  for (const Query& q : workload.queries) {
    if (is_satisfied(q, policy)) ++satisfied;
  }
  return satisfied;
}

}  // namespace logret::reference
