#pragma once

#include <cstdint>

#include "logret/retention.hpp"
#include "logret/workload.hpp"

namespace logret {

// Bytes per GB. Decimal GB, matching cloud billing convention (not GiB).
inline constexpr double kBytesPerGb = 1e9;

struct PricingModel {
  double usd_per_gb_month = 0.25;
  double days_per_month = 30.0;

  void validate() const;
};

struct CostReport {
  std::int64_t window_days = 0;
  double steady_state_gb = 0.0;       // retained GB at the final profile day
  double monthly_run_rate_usd = 0.0;  // steady_state_gb * usd_per_gb_month
  double accumulated_usd = 0.0;       // day-by-day accrual over the horizon, warm-up included
  double relative_cost = 1.0;         // vs the configured baseline; assigned by the caller
};

// USD per GB-day.
double daily_rate(const PricingModel& pricing);

CostReport storage_cost(const DailyVolumeProfile& profile, const RetentionPolicy& policy,
                        const PricingModel& pricing);

}  // namespace logret
