#include "logret/costmodel.hpp"

#include "logret/errors.hpp"

namespace logret {

void PricingModel::validate() const {
  if (!(usd_per_gb_month > 0.0)) throw ConfigError("pricing.usd_per_gb_month must be > 0");
  if (!(days_per_month > 0.0)) throw ConfigError("pricing.days_per_month must be > 0");
}

double daily_rate(const PricingModel& pricing) {
  pricing.validate();
  return pricing.usd_per_gb_month / pricing.days_per_month;
}

CostReport storage_cost(const DailyVolumeProfile& profile, const RetentionPolicy& policy,
                        const PricingModel& pricing) {
  pricing.validate();
  policy.validate();
  if (profile.days.empty()) throw ConfigError("storage_cost: empty profile");

  const std::int64_t horizon = profile.horizon_days();
  const double rate = daily_rate(pricing);

  // Sliding-window sum of retained bytes, accrued day by day.
  std::uint64_t window_bytes = 0;
  double accumulated = 0.0;
  for (std::int64_t d = 0; d < horizon; ++d) {
    window_bytes += profile.days[static_cast<std::size_t>(d)].total_bytes;
    const std::int64_t expired = d - policy.window_days;
    if (expired >= 0) {
      window_bytes -= profile.days[static_cast<std::size_t>(expired)].total_bytes;
    }
    accumulated += static_cast<double>(window_bytes) / kBytesPerGb * rate;
  }

  CostReport report;
  report.window_days = policy.window_days;
  report.steady_state_gb = static_cast<double>(window_bytes) / kBytesPerGb;
  report.monthly_run_rate_usd = report.steady_state_gb * pricing.usd_per_gb_month;
  report.accumulated_usd = accumulated;
  return report;
}

}  // namespace logret
