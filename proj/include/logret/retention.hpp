#pragma once

#include <cstdint>

#include "logret/workload.hpp"

namespace logret {

// Whole-day retention window; entries expire at day boundaries.
struct RetentionPolicy {
  std::int64_t window_days = 90;

  void validate() const;
};

// Volume still stored at the end of as_of_day under a window: the most
// recent min(window_days, as_of_day + 1) days of the profile.
struct RetainedSnapshot {
  std::int64_t as_of_day = 0;
  std::int64_t window_days = 0;
  std::uint64_t retained_entries = 0;
  std::uint64_t retained_bytes = 0;
};

RetainedSnapshot retained_volume(const DailyVolumeProfile& profile,
                                 const RetentionPolicy& policy, std::int64_t as_of_day);

// retained_bytes(policy) / retained_bytes(baseline) at as_of_day. Throws
// UndefinedRatioError when the baseline retains zero bytes.
double relative_retained(const DailyVolumeProfile& profile, const RetentionPolicy& policy,
                         const RetentionPolicy& baseline, std::int64_t as_of_day);

}  // namespace logret
