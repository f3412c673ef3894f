#include "logret/retention.hpp"

#include <algorithm>
#include <stdexcept>

#include "logret/errors.hpp"

namespace logret {

void RetentionPolicy::validate() const {
  if (window_days < 1) throw ConfigError("retention window_days must be >= 1");
}

RetainedSnapshot retained_volume(const DailyVolumeProfile& profile,
                                 const RetentionPolicy& policy, std::int64_t as_of_day) {
  policy.validate();
  if (as_of_day < 0 || as_of_day >= profile.horizon_days()) {
    throw std::out_of_range("retained_volume: as_of_day out of range");
  }
  const std::int64_t first = std::max<std::int64_t>(0, as_of_day - policy.window_days + 1);
  RetainedSnapshot snapshot;
  snapshot.as_of_day = as_of_day;
  snapshot.window_days = policy.window_days;
  for (std::int64_t d = first; d <= as_of_day; ++d) {
    const DayVolume& day = profile.days[static_cast<std::size_t>(d)];
    snapshot.retained_entries += day.entry_count;
    snapshot.retained_bytes += day.total_bytes;
  }
  return snapshot;
}

double relative_retained(const DailyVolumeProfile& profile, const RetentionPolicy& policy,
                         const RetentionPolicy& baseline, std::int64_t as_of_day) {
  const RetainedSnapshot base = retained_volume(profile, baseline, as_of_day);
  if (base.retained_bytes == 0) {
    throw UndefinedRatioError("relative_retained: baseline retains zero bytes");
  }
  const RetainedSnapshot target = retained_volume(profile, policy, as_of_day);
  return static_cast<double>(target.retained_bytes) /
         static_cast<double>(base.retained_bytes);
}

}  // namespace logret
