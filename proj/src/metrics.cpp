#include "logret/metrics.hpp"

#include <algorithm>
#include <string>

#include "logret/errors.hpp"

namespace logret {

double cpul(const CostReport& cost, std::int64_t satisfied_queries) {
  if (satisfied_queries < 0) throw ConfigError("cpul: satisfied_queries must be >= 0");
  if (satisfied_queries == 0) {
    throw UndefinedRatioError("cpul: no satisfied queries under this window");
  }
  return cost.monthly_run_rate_usd / static_cast<double>(satisfied_queries);
}

double normalized_cpul(const CostReport& target_cost, double target_ulr,
                       const CostReport& baseline_cost, double baseline_ulr) {
  if (!(baseline_cost.steady_state_gb > 0.0)) {
    throw UndefinedRatioError("normalized_cpul: baseline cost is zero");
  }
  if (!(baseline_ulr > 0.0)) {
    throw UndefinedRatioError("normalized_cpul: baseline ULR is zero");
  }
  const double relative_ulr = target_ulr / baseline_ulr;
  if (!(relative_ulr > 0.0)) {
    throw UndefinedRatioError("normalized_cpul: target ULR is zero");
  }
  return target_cost.relative_cost / relative_ulr;
}

ScenarioReport scenario_matrix(const DailyVolumeProfile& profile,
                               const std::vector<RetentionPolicy>& windows,
                               const AccessDistribution& dist, std::int64_t query_count,
                               std::uint64_t seed, const PricingModel& pricing,
                               const RetentionPolicy& baseline, double span_days) {
  if (windows.empty()) throw ConfigError("scenario_matrix: no windows given");
  if (query_count < 1) throw ConfigError("scenario_matrix: query_count must be >= 1");
  const bool has_baseline = std::any_of(windows.begin(), windows.end(), [&](const auto& w) {
    return w.window_days == baseline.window_days;
  });
  if (!has_baseline) {
    throw ConfigError("scenario_matrix: baseline window must be in the window list");
  }
  if (profile.days.empty()) throw ConfigError("scenario_matrix: empty profile");
  if (dist.max_age_days() > static_cast<double>(profile.horizon_days())) {
    throw ConfigError("distribution '" + dist.name + "' targets log ages up to " +
                      std::to_string(static_cast<long long>(dist.max_age_days())) +
                      " days but the profile covers only " +
                      std::to_string(profile.horizon_days()) +
                      " days; use a shorter distribution or a longer workload");
  }

  // One workload shared across all windows; resampling per window would
  // decouple the ULR column from the cost column.
  const QueryWorkload workload = sample_queries(dist, query_count, seed, span_days);
  const std::int64_t last_day = profile.horizon_days() - 1;

  const CostReport baseline_cost = storage_cost(profile, baseline, pricing);
  const std::int64_t baseline_satisfied = satisfied_count(workload, baseline);
  const double baseline_ulr =
      static_cast<double>(baseline_satisfied) / static_cast<double>(query_count);

  std::vector<RetentionPolicy> sorted_windows = windows;
  std::sort(sorted_windows.begin(), sorted_windows.end(),
            [](const auto& a, const auto& b) { return a.window_days > b.window_days; });
  sorted_windows.erase(std::unique(sorted_windows.begin(), sorted_windows.end(),
                                   [](const auto& a, const auto& b) {
                                     return a.window_days == b.window_days;
                                   }),
                       sorted_windows.end());

  ScenarioReport report;
  report.baseline_window_days = baseline.window_days;
  report.distribution_name = dist.name;
  report.seed = seed;
  report.pricing = pricing;
  report.query_count = query_count;
  report.query_span_days = span_days;

  for (const RetentionPolicy& window : sorted_windows) {
    try {
      ScenarioRow row;
      row.window_days = window.window_days;
      CostReport cost = storage_cost(profile, window, pricing);
      cost.relative_cost = relative_retained(profile, window, baseline, last_day);
      row.relative_cost = cost.relative_cost;
      row.satisfied_queries = satisfied_count(workload, window);
      row.total_queries = query_count;
      row.ulr = static_cast<double>(row.satisfied_queries) / static_cast<double>(query_count);
      row.cpul_normalized = normalized_cpul(cost, row.ulr, baseline_cost, baseline_ulr);
      row.monthly_run_rate_usd = cost.monthly_run_rate_usd;
      row.accumulated_usd = cost.accumulated_usd;
      row.steady_state_gb = cost.steady_state_gb;
      report.rows.push_back(row);
    } catch (const UndefinedRatioError& e) {
      throw UndefinedRatioError("window " + std::to_string(window.window_days) + ": " +
                                e.what());
    }
  }
  return report;
}

}  // namespace logret
