#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "logret/querysim.hpp"
#include "logret/workload.hpp"

namespace logret::reference {

// Plain single-threaded counterparts of the OpenMP kernels. Kept as the
// ground truth the parallel paths are tested and benchmarked against; every
// function must produce output identical to its parallel twin.

DailyVolumeProfile sample_daily_volumes(const WorkloadSpec& spec);

// Same as the parallel version, but days are visited in the given order.
// Exercises the per-day stream contract: any visit order, same profile.
DailyVolumeProfile sample_daily_volumes_ordered(const WorkloadSpec& spec,
                                                std::span<const std::int64_t> day_order);

std::vector<LogEntry> generate_entries(const WorkloadSpec& spec, std::int64_t day_index,
                                       std::int64_t target_count);

QueryWorkload sample_queries(const AccessDistribution& dist, std::int64_t count,
                             std::uint64_t seed, double span_days = 0.0);

std::int64_t satisfied_count(const QueryWorkload& workload, const RetentionPolicy& policy);

}  // namespace logret::reference
