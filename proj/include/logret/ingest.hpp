#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "logret/workload.hpp"

namespace logret {

inline constexpr std::size_t kMaxRejectionSamples = 10;

struct IngestReport {
  std::string source_path;
  std::int64_t records_read = 0;      // accepted records
  std::int64_t records_rejected = 0;  // skipped records (lenient mode)
  std::int64_t first_day = -1;        // first/last day that received data; -1 when empty
  std::int64_t last_day = -1;
  std::vector<std::pair<std::size_t, std::string>> rejection_samples;  // (line, reason)
};

struct IngestResult {
  DailyVolumeProfile profile;
  IngestReport report;
};

// Newline-delimited JSON, one record per line:
//   {"ts": <ISO-8601 string | integer epoch-seconds>, "size_bytes": <int>,
//    "severity": <string, optional>, "service": <string, optional>}
// Entries are bucketed into half-open UTC days relative to `epoch_seconds`
// (default: midnight of the earliest timestamp). Malformed lines and entries
// before the epoch are counted and skipped; with strict=true the first bad
// line throws ParseError instead. Missing days are zero-filled.
IngestResult parse_entry_lines(std::istream& source,
                               std::optional<std::int64_t> epoch_seconds = std::nullopt,
                               bool strict = false, const std::string& source_path = "");

// CSV with exact header "day,entries,bytes". `day` is either a 0-based
// integer index or an ISO date (all rows must agree); dates are rebased so
// the earliest date becomes day 0. Duplicate days are a format error; gaps
// are zero-filled; rows with negative or non-numeric values are rejected in
// lenient mode.
IngestResult parse_daily_csv(std::istream& source, bool strict = false,
                             const std::string& source_path = "");

// Inverse of parse_daily_csv: header plus one row per day, LF line endings.
void write_daily_csv(const DailyVolumeProfile& profile, std::ostream& out);

// One JSONL record per entry, in the schema parse_entry_lines accepts.
// Timestamps are written as integer epoch-seconds.
void write_entries_jsonl(const std::vector<LogEntry>& entries, std::ostream& out);

// Accepts "YYYY-MM-DD" and "YYYY-MM-DDTHH:MM:SS[.frac][Z|+HH:MM|-HH:MM]"
// (UTC assumed when no offset is given). Returns Unix seconds.
std::int64_t parse_iso8601(const std::string& text);

// Sums per-day values of both profiles; day 0 is aligned.
DailyVolumeProfile merge_profiles(const DailyVolumeProfile& a, const DailyVolumeProfile& b);

}  // namespace logret
