#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "logret/ingest.hpp"
#include "logret/metrics.hpp"

namespace logret {

enum class OutputFormat { Table, Csv, Json };

OutputFormat output_format_from_name(const std::string& name);
const char* output_format_name(OutputFormat format);

// A real-data source standing in for the synthetic workload.
struct IngestSourceConfig {
  std::string path;
  std::string format = "jsonl";  // "jsonl" | "daily-csv"
  std::optional<std::string> epoch_iso;
  bool strict = false;
};

// Fully resolved run parameters. Defaults reproduce the bundled reference
// scenario: 90-day synthetic workload, windows 7/14/30/90 against a 90-day
// baseline, "table2" access distribution, 10,000 point queries.
struct RunConfig {
  std::optional<WorkloadSpec> workload;
  std::optional<IngestSourceConfig> ingest;
  std::vector<std::int64_t> windows = {7, 14, 30, 90};
  std::int64_t baseline_window = 90;
  AccessDistribution distribution = preset_distribution("table2");
  std::int64_t query_count = 10000;
  double query_span_days = 0.0;
  PricingModel pricing;
  std::uint64_t seed = 42;
  OutputFormat output_format = OutputFormat::Table;

  // Set when the config file pinned these, so CLI/env fallbacks know
  // whether to apply.
  bool seed_from_file = false;
  bool workload_seed_from_file = false;

  void validate() const;
};

// Parses the JSON config schema, rejecting unknown fields. Throws
// ConfigError naming the offending field.
RunConfig parse_run_config(const nlohmann::json& config);
RunConfig load_run_config_file(const std::string& path);

// Distribution named on the CLI: a preset name, or "@file.json" holding an
// array of {age_lo, age_hi, probability}.
AccessDistribution resolve_distribution_arg(const std::string& arg);
AccessDistribution parse_distribution_json(const nlohmann::json& buckets, const std::string& name);

// Applies the constant-volume reference scenario: min = max = 300k entries
// of 150 bytes per day over 90 days, no jitter, "table2" distribution,
// 10,000 point queries, windows 90/30/14/7, default pricing.
void apply_reference_scenario(RunConfig& config);

// Materializes defaults: a workload when neither workload nor ingest was
// given, and the run seed propagated into the workload unless the config
// file pinned one.
void finalize_config(RunConfig& config);

// The fully-materialized config embedded in JSON reports, making every
// report self-describing and re-runnable.
nlohmann::ordered_json config_echo(const RunConfig& config);

// Builds the profile (synthetic or ingested). A non-null report_out
// receives the ingest summary when an ingest source is used.
DailyVolumeProfile resolve_profile(const RunConfig& config, IngestReport* report_out = nullptr);

// End-to-end pipeline: profile -> scenario matrix. The second form reuses
// an already-resolved profile.
ScenarioReport run_scenario(const RunConfig& config);
ScenarioReport run_scenario(const RunConfig& config, const DailyVolumeProfile& profile);

// Renders a report. "table" mirrors the window/relative-cost/ULR/CPUL
// layout; "csv" and "json" carry full-precision values.
std::string emit_report(const ScenarioReport& report, OutputFormat format,
                        const RunConfig& config);

std::string format_ingest_summary(const IngestReport& report, const VolumeTotals& totals);

}  // namespace logret
