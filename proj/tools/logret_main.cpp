#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "logret/cli.hpp"
#include "logret/errors.hpp"
#include "logret/version.hpp"

namespace {

using namespace logret;

std::optional<std::uint64_t> seed_from_env() {
  const char* raw = std::getenv("LOGRET_SEED");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  errno = 0;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (errno != 0 || end == raw || *end != '\0') {
    throw ConfigError("LOGRET_SEED must be an unsigned integer, got: " + std::string(raw));
  }
  return static_cast<std::uint64_t>(value);
}

struct RunFlags {
  std::string config_path;
  std::uint64_t seed = 0;
  std::vector<std::int64_t> windows;
  std::int64_t baseline = 0;
  std::string dist;
  std::int64_t queries = 0;
  double span = 0.0;
  double price_per_gb_month = 0.0;
  double days_per_month = 0.0;
  std::string format;
  bool paper = false;
};

// Precedence: explicit flags > --paper > config file > LOGRET_SEED > defaults.
RunConfig assemble_run_config(const RunFlags& flags, const CLI::App& cmd) {
  RunConfig config;
  if (!flags.config_path.empty()) config = load_run_config_file(flags.config_path);

  if (!config.seed_from_file) {
    if (auto env_seed = seed_from_env()) config.seed = *env_seed;
  }
  if (cmd.count("--seed") > 0) config.seed = flags.seed;

  if (flags.paper) apply_reference_scenario(config);

  if (cmd.count("--windows") > 0) config.windows = flags.windows;
  if (cmd.count("--baseline") > 0) config.baseline_window = flags.baseline;
  if (cmd.count("--dist") > 0) config.distribution = resolve_distribution_arg(flags.dist);
  if (cmd.count("--queries") > 0) config.query_count = flags.queries;
  if (cmd.count("--span") > 0) config.query_span_days = flags.span;
  if (cmd.count("--price-per-gb-month") > 0) {
    config.pricing.usd_per_gb_month = flags.price_per_gb_month;
  }
  if (cmd.count("--days-per-month") > 0) config.pricing.days_per_month = flags.days_per_month;
  if (cmd.count("--format") > 0) config.output_format = output_format_from_name(flags.format);

  finalize_config(config);
  return config;
}

int cmd_run(const RunFlags& flags, const CLI::App& cmd) {
  RunConfig config = assemble_run_config(flags, cmd);
  config.validate();
  IngestReport ingest_report;
  const DailyVolumeProfile profile = resolve_profile(config, &ingest_report);
  if (config.ingest && ingest_report.records_rejected > 0) {
    std::cerr << "note: skipped " << ingest_report.records_rejected
              << " malformed record(s) from " << config.ingest->path << '\n';
  }
  const ScenarioReport report = run_scenario(config, profile);
  std::cout << emit_report(report, config.output_format, config);
  return 0;
}

int cmd_gen(const std::string& config_path, const std::string& out_profile,
            const std::string& out_entries, std::int64_t day, bool have_day) {
  RunConfig config = load_run_config_file(config_path);
  if (config.ingest) throw ConfigError("gen requires a workload config, not an ingest source");
  if (!config.seed_from_file) {
    if (auto env_seed = seed_from_env()) config.seed = *env_seed;
  }
  finalize_config(config);
  const WorkloadSpec& spec = *config.workload;
  spec.validate();

  const DailyVolumeProfile profile = sample_daily_volumes(spec);
  {
    std::ofstream out(out_profile, std::ios::binary);
    if (!out) throw IoError("cannot open output file: " + out_profile);
    write_daily_csv(profile, out);
  }
  const VolumeTotals totals = total_volume(profile);
  std::cout << "wrote " << profile.horizon_days() << "-day profile (" << totals.entries
            << " entries, " << totals.bytes << " bytes) to " << out_profile << '\n';

  if (!out_entries.empty()) {
    if (!have_day) throw ConfigError("--out-entries requires --day");
    if (day < 0 || day >= spec.horizon_days) {
      throw ConfigError("--day must be in [0, horizon_days)");
    }
    const auto count =
        static_cast<std::int64_t>(profile.days[static_cast<std::size_t>(day)].entry_count);
    const std::vector<LogEntry> entries = generate_entries(spec, day, count);
    std::ofstream out(out_entries, std::ios::binary);
    if (!out) throw IoError("cannot open output file: " + out_entries);
    write_entries_jsonl(entries, out);
    std::cout << "wrote " << entries.size() << " entries for day " << day << " to "
              << out_entries << '\n';
  }
  return 0;
}

int cmd_ingest(const std::string& format, const std::string& in_path,
               const std::string& epoch_iso, bool strict, const std::string& out_profile) {
  std::ifstream in(in_path, std::ios::binary);
  if (!in) throw IoError("cannot open input file: " + in_path);
  std::optional<std::int64_t> epoch;
  if (!epoch_iso.empty()) epoch = parse_iso8601(epoch_iso);

  IngestResult result = format == "jsonl" ? parse_entry_lines(in, epoch, strict, in_path)
                                          : parse_daily_csv(in, strict, in_path);
  std::cout << format_ingest_summary(result.report, total_volume(result.profile));

  if (!out_profile.empty()) {
    std::ofstream out(out_profile, std::ios::binary);
    if (!out) throw IoError("cannot open output file: " + out_profile);
    write_daily_csv(result.profile, out);
    std::cout << "wrote normalized profile to " << out_profile << '\n';
  }
  return 0;
}

int cmd_presets() {
  for (const std::string& name : preset_distribution_names()) {
    const AccessDistribution dist = preset_distribution(name);
    std::cout << name << '\n';
    for (const AgeBucket& b : dist.buckets) {
      char line[96];
      std::snprintf(line, sizeof line, "  (%4g, %4g] days   p = %.2f\n", b.age_lo_days,
                    b.age_hi_days, b.probability);
      std::cout << line;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"log retention cost / usefulness analyzer"};
  app.set_version_flag("--version", std::string(logret::kVersion));
  app.require_subcommand(1);

  RunFlags run_flags;
  CLI::App* run = app.add_subcommand("run", "run a retention scenario matrix");
  run->add_option("--config", run_flags.config_path, "JSON config file");
  run->add_option("--seed", run_flags.seed, "query/workload seed");
  run->add_option("--windows", run_flags.windows, "retention windows in days")->delimiter(',');
  run->add_option("--baseline", run_flags.baseline, "baseline window in days");
  run->add_option("--dist", run_flags.dist, "preset name or @file.json");
  run->add_option("--queries", run_flags.queries, "number of simulated queries");
  run->add_option("--span", run_flags.span, "query lookback span in days");
  run->add_option("--price-per-gb-month", run_flags.price_per_gb_month, "storage price");
  run->add_option("--days-per-month", run_flags.days_per_month, "days per billing month");
  run->add_option("--format", run_flags.format, "table, csv, or json");
  run->add_flag("--paper", run_flags.paper, "constant-volume reference scenario");

  std::string gen_config, gen_out_profile, gen_out_entries;
  std::int64_t gen_day = 0;
  CLI::App* gen = app.add_subcommand("gen", "write a synthetic profile / entry sample");
  gen->add_option("--config", gen_config, "JSON config file")->required();
  gen->add_option("--out-profile", gen_out_profile, "daily CSV output path")->required();
  CLI::Option* out_entries_opt =
      gen->add_option("--out-entries", gen_out_entries, "JSONL output path for one day");
  CLI::Option* day_opt = gen->add_option("--day", gen_day, "day index for --out-entries");
  out_entries_opt->needs(day_opt);

  std::string ingest_format, ingest_in, ingest_epoch, ingest_out_profile;
  bool ingest_strict = false;
  CLI::App* ingest = app.add_subcommand("ingest", "parse and summarize real log data");
  ingest->add_option("--format", ingest_format, "jsonl or daily-csv")
      ->required()
      ->check(CLI::IsMember({"jsonl", "daily-csv"}));
  ingest->add_option("--in", ingest_in, "input path")->required();
  ingest->add_option("--epoch", ingest_epoch, "ISO-8601 day-0 epoch");
  ingest->add_flag("--strict", ingest_strict, "abort on the first malformed record");
  ingest->add_option("--out-profile", ingest_out_profile, "write normalized daily CSV here");

  CLI::App* presets = app.add_subcommand("presets", "list built-in access distributions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return 2;
  }

  try {
    if (run->parsed()) return cmd_run(run_flags, *run);
    if (gen->parsed()) {
      return cmd_gen(gen_config, gen_out_profile, gen_out_entries, gen_day,
                     gen->count("--day") > 0);
    }
    if (ingest->parsed()) {
      return cmd_ingest(ingest_format, ingest_in, ingest_epoch, ingest_strict,
                        ingest_out_profile);
    }
    if (presets->parsed()) return cmd_presets();
  } catch (const logret::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
