#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "logret/costmodel.hpp"
#include "logret/querysim.hpp"

namespace logret {

struct ScenarioRow {
  std::int64_t window_days = 0;
  double relative_cost = 0.0;
  double ulr = 0.0;
  double cpul_normalized = 0.0;
  double monthly_run_rate_usd = 0.0;
  double accumulated_usd = 0.0;
  double steady_state_gb = 0.0;
  std::int64_t satisfied_queries = 0;
  std::int64_t total_queries = 0;
};

// Cross-window comparison matrix: one row per retention window, relative
// cost / ULR / normalized CPUL against the baseline window. Rows are sorted
// descending by window.
struct ScenarioReport {
  std::vector<ScenarioRow> rows;
  std::int64_t baseline_window_days = 0;
  std::string distribution_name;
  std::uint64_t seed = 0;
  PricingModel pricing;
  std::int64_t query_count = 0;
  double query_span_days = 0.0;
};

// Monthly storage cost per satisfied query. Throws UndefinedRatioError when
// no query is satisfied.
double cpul(const CostReport& cost, std::int64_t satisfied_queries);

// relative cost of target vs baseline, divided by relative ULR. Expects
// target_cost.relative_cost to be filled against the same baseline (see
// CostReport); the byte-exact ratio keeps the result invariant under price
// and volume scaling. Equals 1 at the baseline itself.
double normalized_cpul(const CostReport& target_cost, double target_ulr,
                       const CostReport& baseline_cost, double baseline_ulr);

// Scores every window against one shared query workload (same seed for all
// windows, so rows differ only in retention).
ScenarioReport scenario_matrix(const DailyVolumeProfile& profile,
                               const std::vector<RetentionPolicy>& windows,
                               const AccessDistribution& dist, std::int64_t query_count,
                               std::uint64_t seed, const PricingModel& pricing,
                               const RetentionPolicy& baseline, double span_days = 0.0);

}  // namespace logret
