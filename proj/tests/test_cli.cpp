#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#include "logret/cli.hpp"
#include "logret/errors.hpp"

using namespace logret;
using nlohmann::json;

TEST_CASE("defaults form a valid runnable config") {
  RunConfig config;
  finalize_config(config);
  config.validate();
  CHECK(config.windows == std::vector<std::int64_t>{7, 14, 30, 90});
  CHECK(config.baseline_window == 90);
  CHECK(config.distribution.name == "table2");
  CHECK(config.query_count == 10000);
  CHECK(config.pricing.usd_per_gb_month == 0.25);
  CHECK(config.seed == 42);
  REQUIRE(config.workload.has_value());
  CHECK(config.workload->seed == 42);
}

TEST_CASE("full config file parses into the matching struct") {
  const json j = json::parse(R"({
    "workload": {
      "horizon_days": 30,
      "daily_min_entries": 1000,
      "daily_max_entries": 2000,
      "mean_entry_bytes": 100,
      "entry_size_jitter_fraction": 0.1,
      "severity_weights": [0.1, 0.6, 0.2, 0.1],
      "service_count": 3,
      "seed": 9
    },
    "windows": [5, 10, 30],
    "baseline_window": 30,
    "distribution": "sre-default",
    "query_count": 500,
    "query_span_days": 1.5,
    "pricing": {"usd_per_gb_month": 0.5, "days_per_month": 28},
    "seed": 4,
    "output_format": "csv"
  })");
  RunConfig config = parse_run_config(j);
  finalize_config(config);
  config.validate();
  CHECK(config.workload->horizon_days == 30);
  CHECK(config.workload->seed == 9);  // file-pinned, not overwritten by run seed
  CHECK(config.windows == std::vector<std::int64_t>{5, 10, 30});
  CHECK(config.distribution.name == "sre-default");
  CHECK(config.query_span_days == 1.5);
  CHECK(config.pricing.days_per_month == 28.0);
  CHECK(config.seed == 4);
  CHECK(config.output_format == OutputFormat::Csv);
}

TEST_CASE("unknown fields are named in the error") {
  try {
    parse_run_config(json::parse(R"({"windoes": [7]})"));
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("windoes") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_run_config(json::parse(R"({"workload": {"horizon": 30}})")), ConfigError);
  CHECK_THROWS_AS(parse_run_config(json::parse(R"({"pricing": {"rate": 1}})")), ConfigError);
  CHECK_THROWS_AS(parse_run_config(json::parse(R"([1, 2])")), ConfigError);
  CHECK_THROWS_AS(parse_run_config(json::parse(R"({"query_count": "many"})")), ConfigError);
}

TEST_CASE("validation enforces the cross-field invariants") {
  RunConfig config;
  config.baseline_window = 60;  // not in windows
  CHECK_THROWS_AS(config.validate(), ConfigError);

  config = RunConfig{};
  config.query_count = 0;
  CHECK_THROWS_AS(config.validate(), ConfigError);

  config = RunConfig{};
  config.workload = WorkloadSpec{};
  config.ingest.emplace();
  config.ingest->path = "x.jsonl";
  CHECK_THROWS_AS(config.validate(), ConfigError);

  config = RunConfig{};
  config.windows = {};
  CHECK_THROWS_AS(config.validate(), ConfigError);
}

TEST_CASE("inline distribution arrays are parsed and validated") {
  const json j = json::parse(R"({
    "distribution": [
      {"age_lo": 0, "age_hi": 10, "probability": 0.9},
      {"age_lo": 10, "age_hi": 40, "probability": 0.1}
    ]
  })");
  const RunConfig config = parse_run_config(j);
  CHECK(config.distribution.name == "custom");
  REQUIRE(config.distribution.buckets.size() == 2);
  CHECK(config.distribution.buckets[1].age_hi_days == 40.0);

  CHECK_THROWS_AS(parse_run_config(json::parse(
                      R"({"distribution": [{"age_lo": 0, "age_hi": 10, "probability": 0.5}]})")),
                  ConfigError);  // mass != 1
}

TEST_CASE("reference scenario pin: constant volume and table2") {
  RunConfig config;
  config.seed = 7;
  apply_reference_scenario(config);
  finalize_config(config);
  config.validate();
  REQUIRE(config.workload.has_value());
  CHECK(config.workload->daily_min_entries == config.workload->daily_max_entries);
  CHECK(config.workload->entry_size_jitter_fraction == 0.0);
  CHECK(config.workload->seed == 7);
  CHECK(config.distribution.name == "table2");
  CHECK(config.query_count == 10000);
}

TEST_CASE("config echo materializes every default") {
  RunConfig config;
  finalize_config(config);
  const nlohmann::ordered_json echo = config_echo(config);
  CHECK(echo.contains("workload"));
  CHECK(echo["workload"]["seed"] == 42);
  CHECK(echo["windows"].size() == 4);
  CHECK(echo["distribution"]["name"] == "table2");
  CHECK(echo["pricing"]["usd_per_gb_month"] == 0.25);
  CHECK(echo["output_format"] == "table");
}

TEST_CASE("csv report has the pinned header and sorted rows") {
  RunConfig config;
  apply_reference_scenario(config);
  finalize_config(config);
  const ScenarioReport report = run_scenario(config);
  const std::string csv = emit_report(report, OutputFormat::Csv, config);

  const std::string header = csv.substr(0, csv.find('\n'));
  CHECK(header ==
        "window_days,relative_cost,ulr,cpul_normalized,monthly_run_rate_usd,"
        "satisfied_queries,total_queries");

  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos < csv.size()) {
    const std::size_t next = csv.find('\n', pos);
    lines.push_back(csv.substr(pos, next - pos));
    pos = next + 1;
  }
  REQUIRE(lines.size() == 5);
  CHECK(lines[1].substr(0, 3) == "90,");
  CHECK(lines[2].substr(0, 3) == "30,");
  CHECK(lines[3].substr(0, 3) == "14,");
  CHECK(lines[4].substr(0, 2) == "7,");
}

TEST_CASE("baseline-only report renders as header plus one row") {
  RunConfig config;
  config.windows = {90};
  finalize_config(config);
  const ScenarioReport report = run_scenario(config);
  const std::string csv = emit_report(report, OutputFormat::Csv, config);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);
  REQUIRE(report.rows.size() == 1);
  CHECK(report.rows[0].relative_cost == 1.0);
  CHECK(report.rows[0].cpul_normalized == 1.0);
  CHECK(report.rows[0].ulr == 1.0);
}

TEST_CASE("json report re-parses to the exact in-memory values") {
  RunConfig config;
  config.query_count = 2000;
  finalize_config(config);
  const ScenarioReport report = run_scenario(config);
  const std::string rendered = emit_report(report, OutputFormat::Json, config);
  const json parsed = json::parse(rendered);

  REQUIRE(parsed["rows"].size() == report.rows.size());
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const auto& row = parsed["rows"][i];
    CHECK(row["window_days"].get<std::int64_t>() == report.rows[i].window_days);
    CHECK(row["relative_cost"].get<double>() == report.rows[i].relative_cost);
    CHECK(row["ulr"].get<double>() == report.rows[i].ulr);
    CHECK(row["cpul_normalized"].get<double>() == report.rows[i].cpul_normalized);
    CHECK(row["monthly_run_rate_usd"].get<double>() == report.rows[i].monthly_run_rate_usd);
    CHECK(row["satisfied_queries"].get<std::int64_t>() == report.rows[i].satisfied_queries);
  }
  CHECK(parsed["config_echo"]["seed"].get<std::uint64_t>() == config.seed);
  CHECK(parsed.contains("generated_by_version"));
}

TEST_CASE("identical configs render identical bytes in every format") {
  RunConfig config;
  config.query_count = 3000;
  finalize_config(config);
  for (OutputFormat format : {OutputFormat::Table, OutputFormat::Csv, OutputFormat::Json}) {
    const std::string first = emit_report(run_scenario(config), format, config);
    const std::string second = emit_report(run_scenario(config), format, config);
    CHECK(first == second);
    CHECK_FALSE(first.empty());
  }
}

TEST_CASE("output format names round trip and reject junk") {
  CHECK(output_format_from_name("table") == OutputFormat::Table);
  CHECK(output_format_from_name("csv") == OutputFormat::Csv);
  CHECK(output_format_from_name("json") == OutputFormat::Json);
  CHECK_THROWS_AS(output_format_from_name("yaml"), ConfigError);
  CHECK(std::string(output_format_name(OutputFormat::Json)) == "json");
}

TEST_CASE("ingest-backed config drives the same pipeline") {
  // Profile written by the workload path, read back through the CSV route.
  RunConfig gen_config;
  gen_config.workload = WorkloadSpec{};
  gen_config.workload->horizon_days = 90;
  finalize_config(gen_config);
  const DailyVolumeProfile profile = resolve_profile(gen_config);

  const std::string path = "test_cli_profile.csv";
  {
    std::ofstream out(path);
    write_daily_csv(profile, out);
  }

  RunConfig config;
  config.ingest.emplace();
  config.ingest->path = path;
  config.ingest->format = "daily-csv";
  finalize_config(config);
  config.validate();
  IngestReport report;
  const DailyVolumeProfile loaded = resolve_profile(config, &report);
  CHECK(loaded == profile);
  CHECK(report.records_read == 90);

  const ScenarioReport scenario = run_scenario(config);
  CHECK(scenario.rows.size() == 4);
  std::remove(path.c_str());
}

TEST_CASE("missing files and unusable sources fail cleanly") {
  RunConfig config;
  config.ingest.emplace();
  config.ingest->path = "does_not_exist.jsonl";
  finalize_config(config);
  CHECK_THROWS_AS(resolve_profile(config), IoError);
  CHECK_THROWS_AS(load_run_config_file("does_not_exist.json"), IoError);
}
