// Compares the OpenMP kernels against their serial reference twins and
// checks that both produce identical output.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "logret/reference.hpp"

namespace {

using namespace logret;
using Clock = std::chrono::steady_clock;

double run_ms(const auto& fn) {
  const auto start = Clock::now();
  fn();
  const auto stop = Clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

bool g_all_match = true;

void report(const char* kernel, double serial_ms, double parallel_ms, bool match) {
  g_all_match = g_all_match && match;
  std::printf("%-22s  serial %9.2f ms   parallel %9.2f ms   speedup %5.2fx   %s\n", kernel,
              serial_ms, parallel_ms, serial_ms / parallel_ms, match ? "outputs match" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  std::int64_t days = 200000;
  std::int64_t entries = 500000;
  std::int64_t queries = 2000000;
  int repeat = 3;

  CLI::App app{"serial vs parallel kernel benchmark"};
  app.add_option("--days", days, "profile days to sample");
  app.add_option("--entries", entries, "entries to materialize for one day");
  app.add_option("--queries", queries, "queries to sample and score");
  app.add_option("--repeat", repeat, "repetitions per kernel (best time wins)");
  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; both columns run serially\n\n");
#endif

  WorkloadSpec spec;
  spec.horizon_days = days;
  spec.seed = 42;

  const auto best = [&](const auto& fn) {
    double ms = run_ms(fn);
    for (int i = 1; i < repeat; ++i) ms = std::min(ms, run_ms(fn));
    return ms;
  };

  {
    DailyVolumeProfile serial_out, parallel_out;
    const double serial_ms = best([&] { serial_out = reference::sample_daily_volumes(spec); });
    const double parallel_ms = best([&] { parallel_out = sample_daily_volumes(spec); });
    report("sample_daily_volumes", serial_ms, parallel_ms, serial_out == parallel_out);
  }

  {
    WorkloadSpec day_spec = spec;
    day_spec.horizon_days = 1;
    std::vector<LogEntry> serial_out, parallel_out;
    const double serial_ms = best([&] { serial_out = reference::generate_entries(day_spec, 0, entries); });
    const double parallel_ms = best([&] { parallel_out = generate_entries(day_spec, 0, entries); });
    report("generate_entries", serial_ms, parallel_ms, serial_out == parallel_out);
  }

  const AccessDistribution dist = preset_distribution("sre-default");
  QueryWorkload serial_workload, parallel_workload;
  {
    const double serial_ms = best([&] { serial_workload = reference::sample_queries(dist, queries, 42); });
    const double parallel_ms = best([&] { parallel_workload = sample_queries(dist, queries, 42); });
    report("sample_queries", serial_ms, parallel_ms,
           serial_workload.queries == parallel_workload.queries);
  }

  {
    const RetentionPolicy window{14};
    std::int64_t serial_out = 0, parallel_out = 0;
    const double serial_ms = best([&] { serial_out = reference::satisfied_count(serial_workload, window); });
    const double parallel_ms = best([&] { parallel_out = satisfied_count(parallel_workload, window); });
    report("satisfied_count", serial_ms, parallel_ms, serial_out == parallel_out);
  }

  return g_all_match ? 0 : 1;
}
