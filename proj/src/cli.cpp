#include "logret/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "logret/errors.hpp"
#include "logret/version.hpp"

namespace logret {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

// Shortest decimal that round-trips to the same double.
std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

std::int64_t get_int_field(const json& j, const std::string& field) {
  if (!j.is_number_integer() && !j.is_number_unsigned()) {
    throw ConfigError("config field " + field + " must be an integer");
  }
  return j.get<std::int64_t>();
}

double get_number_field(const json& j, const std::string& field) {
  if (!j.is_number()) throw ConfigError("config field " + field + " must be a number");
  return j.get<double>();
}

std::string get_string_field(const json& j, const std::string& field) {
  if (!j.is_string()) throw ConfigError("config field " + field + " must be a string");
  return j.get<std::string>();
}

WorkloadSpec parse_workload(const json& j, bool& seed_present) {
  if (!j.is_object()) throw ConfigError("config field workload must be an object");
  WorkloadSpec spec;
  seed_present = false;
  for (const auto& [key, value] : j.items()) {
    if (key == "horizon_days") {
      spec.horizon_days = get_int_field(value, "workload.horizon_days");
    } else if (key == "daily_min_entries") {
      spec.daily_min_entries = get_int_field(value, "workload.daily_min_entries");
    } else if (key == "daily_max_entries") {
      spec.daily_max_entries = get_int_field(value, "workload.daily_max_entries");
    } else if (key == "mean_entry_bytes") {
      spec.mean_entry_bytes = get_int_field(value, "workload.mean_entry_bytes");
    } else if (key == "entry_size_jitter_fraction") {
      spec.entry_size_jitter_fraction = get_number_field(value, "workload.entry_size_jitter_fraction");
    } else if (key == "severity_weights") {
      if (!value.is_array() || value.size() != kSeverityCount) {
        throw ConfigError(
            "config field workload.severity_weights must be an array of 4 numbers "
            "(DEBUG, INFO, WARN, ERROR)");
      }
      for (int i = 0; i < kSeverityCount; ++i) {
        spec.severity_weights[static_cast<std::size_t>(i)] =
            get_number_field(value[static_cast<std::size_t>(i)], "workload.severity_weights");
      }
    } else if (key == "service_count") {
      spec.service_count = get_int_field(value, "workload.service_count");
    } else if (key == "seed") {
      spec.seed = static_cast<std::uint64_t>(get_int_field(value, "workload.seed"));
      seed_present = true;
    } else {
      throw ConfigError("unknown config field: workload." + key);
    }
  }
  return spec;
}

IngestSourceConfig parse_ingest_source(const json& j) {
  if (!j.is_object()) throw ConfigError("config field ingest must be an object");
  IngestSourceConfig source;
  for (const auto& [key, value] : j.items()) {
    if (key == "path") {
      source.path = get_string_field(value, "ingest.path");
    } else if (key == "format") {
      source.format = get_string_field(value, "ingest.format");
    } else if (key == "epoch") {
      source.epoch_iso = get_string_field(value, "ingest.epoch");
    } else if (key == "strict") {
      if (!value.is_boolean()) throw ConfigError("config field ingest.strict must be a boolean");
      source.strict = value.get<bool>();
    } else {
      throw ConfigError("unknown config field: ingest." + key);
    }
  }
  if (source.path.empty()) throw ConfigError("config field ingest.path is required");
  if (source.format != "jsonl" && source.format != "daily-csv") {
    throw ConfigError("config field ingest.format must be \"jsonl\" or \"daily-csv\"");
  }
  return source;
}

ordered_json distribution_echo(const AccessDistribution& dist) {
  ordered_json buckets = ordered_json::array();
  for (const AgeBucket& b : dist.buckets) {
    buckets.push_back({{"age_lo", b.age_lo_days}, {"age_hi", b.age_hi_days},
                       {"probability", b.probability}});
  }
  return ordered_json{{"name", dist.name}, {"buckets", buckets}};
}

}  // namespace

OutputFormat output_format_from_name(const std::string& name) {
  if (name == "table") return OutputFormat::Table;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw ConfigError("config field output_format must be table, csv, or json (got " + name + ")");
}

const char* output_format_name(OutputFormat format) {
  switch (format) {
    case OutputFormat::Table: return "table";
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Json: return "json";
  }
  return "table";
}

void RunConfig::validate() const {
  if (workload && ingest) {
    throw ConfigError("config fields workload and ingest are mutually exclusive");
  }
  if (windows.empty()) throw ConfigError("config field windows must not be empty");
  for (std::int64_t w : windows) {
    if (w < 1) throw ConfigError("config field windows must contain positive day counts");
  }
  if (std::find(windows.begin(), windows.end(), baseline_window) == windows.end()) {
    throw ConfigError("config field baseline_window must appear in windows");
  }
  if (query_count < 1) throw ConfigError("config field query_count must be >= 1");
  if (query_span_days < 0.0) throw ConfigError("config field query_span_days must be >= 0");
  distribution.validate();
  pricing.validate();
  if (workload) workload->validate();
}

AccessDistribution parse_distribution_json(const json& buckets, const std::string& name) {
  if (!buckets.is_array() || buckets.empty()) {
    throw ConfigError("distribution must be a non-empty array of buckets");
  }
  AccessDistribution dist;
  dist.name = name;
  for (const auto& bucket : buckets) {
    if (!bucket.is_object()) throw ConfigError("distribution bucket must be an object");
    AgeBucket b;
    bool have_lo = false, have_hi = false, have_p = false;
    for (const auto& [key, value] : bucket.items()) {
      if (key == "age_lo") {
        b.age_lo_days = get_number_field(value, "distribution.age_lo");
        have_lo = true;
      } else if (key == "age_hi") {
        b.age_hi_days = get_number_field(value, "distribution.age_hi");
        have_hi = true;
      } else if (key == "probability") {
        b.probability = get_number_field(value, "distribution.probability");
        have_p = true;
      } else {
        throw ConfigError("unknown distribution bucket field: " + key);
      }
    }
    if (!have_lo || !have_hi || !have_p) {
      throw ConfigError("distribution bucket needs age_lo, age_hi, and probability");
    }
    dist.buckets.push_back(b);
  }
  dist.validate();
  return dist;
}

AccessDistribution resolve_distribution_arg(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') {
    const std::string path = arg.substr(1);
    std::ifstream in(path);
    if (!in) throw IoError("cannot open distribution file: " + path);
    json j;
    try {
      j = json::parse(in);
    } catch (const json::parse_error& e) {
      throw ConfigError("distribution file " + path + ": " + e.what());
    }
    return parse_distribution_json(j, path);
  }
  return preset_distribution(arg);
}

RunConfig parse_run_config(const json& config) {
  if (!config.is_object()) throw ConfigError("config root must be a JSON object");
  RunConfig cfg;
  for (const auto& [key, value] : config.items()) {
    if (key == "workload") {
      bool seed_present = false;
      cfg.workload = parse_workload(value, seed_present);
      cfg.workload_seed_from_file = seed_present;
    } else if (key == "ingest") {
      cfg.ingest = parse_ingest_source(value);
    } else if (key == "windows") {
      if (!value.is_array() || value.empty()) {
        throw ConfigError("config field windows must be a non-empty array of integers");
      }
      cfg.windows.clear();
      for (const auto& w : value) cfg.windows.push_back(get_int_field(w, "windows"));
    } else if (key == "baseline_window") {
      cfg.baseline_window = get_int_field(value, "baseline_window");
    } else if (key == "distribution") {
      if (value.is_string()) {
        cfg.distribution = preset_distribution(value.get<std::string>());
      } else {
        cfg.distribution = parse_distribution_json(value, "custom");
      }
    } else if (key == "query_count") {
      cfg.query_count = get_int_field(value, "query_count");
    } else if (key == "query_span_days") {
      cfg.query_span_days = get_number_field(value, "query_span_days");
    } else if (key == "pricing") {
      if (!value.is_object()) throw ConfigError("config field pricing must be an object");
      for (const auto& [pkey, pvalue] : value.items()) {
        if (pkey == "usd_per_gb_month") {
          cfg.pricing.usd_per_gb_month = get_number_field(pvalue, "pricing.usd_per_gb_month");
        } else if (pkey == "days_per_month") {
          cfg.pricing.days_per_month = get_number_field(pvalue, "pricing.days_per_month");
        } else {
          throw ConfigError("unknown config field: pricing." + pkey);
        }
      }
    } else if (key == "seed") {
      cfg.seed = static_cast<std::uint64_t>(get_int_field(value, "seed"));
      cfg.seed_from_file = true;
    } else if (key == "output_format") {
      cfg.output_format = output_format_from_name(get_string_field(value, "output_format"));
    } else {
      throw ConfigError("unknown config field: " + key);
    }
  }
  return cfg;
}

RunConfig load_run_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file: " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config file " + path + ": " + e.what());
  }
  return parse_run_config(j);
}

void apply_reference_scenario(RunConfig& config) {
  WorkloadSpec workload;
  workload.horizon_days = 90;
  workload.daily_min_entries = 300000;
  workload.daily_max_entries = 300000;
  workload.mean_entry_bytes = 150;
  workload.entry_size_jitter_fraction = 0.0;
  workload.seed = config.seed;
  config.workload = workload;
  config.ingest.reset();
  config.windows = {7, 14, 30, 90};
  config.baseline_window = 90;
  config.distribution = preset_distribution("table2");
  config.query_count = 10000;
  config.query_span_days = 0.0;
  config.pricing = PricingModel{};
}

void finalize_config(RunConfig& config) {
  if (!config.ingest && !config.workload) config.workload = WorkloadSpec{};
  if (config.workload && !config.workload_seed_from_file) config.workload->seed = config.seed;
}

ordered_json config_echo(const RunConfig& config) {
  ordered_json echo;
  if (config.ingest) {
    const IngestSourceConfig& src = *config.ingest;
    ordered_json ingest{{"path", src.path}, {"format", src.format}, {"strict", src.strict}};
    if (src.epoch_iso) ingest["epoch"] = *src.epoch_iso;
    echo["ingest"] = ingest;
  } else {
    const WorkloadSpec spec = config.workload.value_or(WorkloadSpec{});
    echo["workload"] = ordered_json{
        {"horizon_days", spec.horizon_days},
        {"daily_min_entries", spec.daily_min_entries},
        {"daily_max_entries", spec.daily_max_entries},
        {"mean_entry_bytes", spec.mean_entry_bytes},
        {"entry_size_jitter_fraction", spec.entry_size_jitter_fraction},
        {"severity_weights", spec.severity_weights},
        {"service_count", spec.service_count},
        {"seed", spec.seed},
    };
  }
  echo["windows"] = config.windows;
  echo["baseline_window"] = config.baseline_window;
  echo["distribution"] = distribution_echo(config.distribution);
  echo["query_count"] = config.query_count;
  echo["query_span_days"] = config.query_span_days;
  echo["pricing"] = ordered_json{{"usd_per_gb_month", config.pricing.usd_per_gb_month},
                                 {"days_per_month", config.pricing.days_per_month}};
  echo["seed"] = config.seed;
  echo["output_format"] = output_format_name(config.output_format);
  return echo;
}

DailyVolumeProfile resolve_profile(const RunConfig& config, IngestReport* report_out) {
  if (config.ingest) {
    const IngestSourceConfig& src = *config.ingest;
    std::ifstream in(src.path, std::ios::binary);
    if (!in) throw IoError("cannot open ingest source: " + src.path);
    std::optional<std::int64_t> epoch;
    if (src.epoch_iso) epoch = parse_iso8601(*src.epoch_iso);
    IngestResult result = src.format == "jsonl"
                              ? parse_entry_lines(in, epoch, src.strict, src.path)
                              : parse_daily_csv(in, src.strict, src.path);
    if (report_out) *report_out = result.report;
    if (result.profile.days.empty()) {
      throw ConfigError("ingest source " + src.path + " yielded no usable records");
    }
    return result.profile;
  }
  const WorkloadSpec spec = config.workload.value_or(WorkloadSpec{});
  return sample_daily_volumes(spec);
}

ScenarioReport run_scenario(const RunConfig& config) {
  config.validate();
  return run_scenario(config, resolve_profile(config));
}

ScenarioReport run_scenario(const RunConfig& config, const DailyVolumeProfile& profile) {
  config.validate();
  std::vector<RetentionPolicy> windows;
  windows.reserve(config.windows.size());
  for (std::int64_t w : config.windows) windows.push_back(RetentionPolicy{w});
  return scenario_matrix(profile, windows, config.distribution, config.query_count, config.seed,
                         config.pricing, RetentionPolicy{config.baseline_window},
                         config.query_span_days);
}

std::string emit_report(const ScenarioReport& report, OutputFormat format,
                        const RunConfig& config) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::Csv: {
      out << "window_days,relative_cost,ulr,cpul_normalized,monthly_run_rate_usd,"
             "satisfied_queries,total_queries\n";
      for (const ScenarioRow& row : report.rows) {
        out << row.window_days << ',' << format_double(row.relative_cost) << ','
            << format_double(row.ulr) << ',' << format_double(row.cpul_normalized) << ','
            << format_double(row.monthly_run_rate_usd) << ',' << row.satisfied_queries << ','
            << row.total_queries << '\n';
      }
      break;
    }
    case OutputFormat::Json: {
      ordered_json doc;
      doc["config_echo"] = config_echo(config);
      ordered_json rows = ordered_json::array();
      for (const ScenarioRow& row : report.rows) {
        rows.push_back(ordered_json{
            {"window_days", row.window_days},
            {"relative_cost", row.relative_cost},
            {"ulr", row.ulr},
            {"cpul_normalized", row.cpul_normalized},
            {"monthly_run_rate_usd", row.monthly_run_rate_usd},
            {"accumulated_usd", row.accumulated_usd},
            {"steady_state_gb", row.steady_state_gb},
            {"satisfied_queries", row.satisfied_queries},
            {"total_queries", row.total_queries},
        });
      }
      doc["rows"] = rows;
      doc["generated_by_version"] = kVersion;
      out << doc.dump(2) << '\n';
      break;
    }
    case OutputFormat::Table: {
      char line[256];
      std::snprintf(line, sizeof line,
                    "Retention window analysis  (distribution=%s, queries=%lld, seed=%llu, "
                    "baseline=%lldd)\n",
                    report.distribution_name.c_str(),
                    static_cast<long long>(report.query_count),
                    static_cast<unsigned long long>(report.seed),
                    static_cast<long long>(report.baseline_window_days));
      out << line;
      std::snprintf(line, sizeof line, "Pricing: $%.4f per GB-month, %.4g-day month\n\n",
                    report.pricing.usd_per_gb_month, report.pricing.days_per_month);
      out << line;
      out << "  Window   Rel. Cost   Reduction   ULR    CPUL (norm)   Monthly USD   Satisfied\n";
      for (const ScenarioRow& row : report.rows) {
        std::snprintf(line, sizeof line,
                      "  %4lld d   %8lld%%   %8lld%%   %3lld%%   %11.2f   %11.2f   %lld/%lld\n",
                      static_cast<long long>(row.window_days),
                      std::llround(row.relative_cost * 100.0),
                      std::llround((1.0 - row.relative_cost) * 100.0),
                      std::llround(row.ulr * 100.0), row.cpul_normalized,
                      row.monthly_run_rate_usd, static_cast<long long>(row.satisfied_queries),
                      static_cast<long long>(row.total_queries));
        out << line;
      }
      break;
    }
  }
  return out.str();
}

std::string format_ingest_summary(const IngestReport& report, const VolumeTotals& totals) {
  std::ostringstream out;
  out << "source:            " << report.source_path << '\n';
  out << "records accepted:  " << report.records_read << '\n';
  out << "records rejected:  " << report.records_rejected << '\n';
  if (report.first_day >= 0) {
    out << "day span:          " << report.first_day << ".." << report.last_day << '\n';
  } else {
    out << "day span:          (no data)\n";
  }
  out << "total entries:     " << totals.entries << '\n';
  out << "total bytes:       " << totals.bytes << '\n';
  for (const auto& [line, reason] : report.rejection_samples) {
    out << "  rejected line " << line << ": " << reason << '\n';
  }
  return out.str();
}

}  // namespace logret
