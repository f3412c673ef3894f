#include "logret/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>

#include <json.hpp>

#include "logret/errors.hpp"

namespace logret {

namespace {

using nlohmann::json;

// Upper bound on profile day indices, so one absurd timestamp or day value
// cannot force a multi-gigabyte zero-fill.
constexpr std::int64_t kMaxDaySpan = 10000000;

// Days since 1970-01-01 for a civil date (Gregorian, proleptic).
std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const auto yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

unsigned days_in_month(std::int64_t y, unsigned m) {
  static constexpr unsigned kLengths[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (m == 2) {
    const bool leap = (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
    return leap ? 29 : 28;
  }
  return kLengths[m - 1];
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

bool parse_int(std::string_view text, std::int64_t& out) {
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

void add_rejection(IngestReport& report, std::size_t line, const std::string& reason) {
  ++report.records_rejected;
  if (report.rejection_samples.size() < kMaxRejectionSamples) {
    report.rejection_samples.emplace_back(line, reason);
  }
}

struct DayAccumulator {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> days;  // (entries, bytes), index = day

  void add(std::int64_t day, std::uint64_t entries, std::uint64_t bytes) {
    const auto idx = static_cast<std::size_t>(day);
    if (idx >= days.size()) days.resize(idx + 1);
    days[idx].first += entries;
    days[idx].second += bytes;
  }

  DailyVolumeProfile to_profile() const {
    DailyVolumeProfile profile;
    profile.days.reserve(days.size());
    for (std::size_t d = 0; d < days.size(); ++d) {
      profile.days.push_back(DayVolume{static_cast<std::int64_t>(d), days[d].first, days[d].second});
    }
    return profile;
  }
};

void fill_day_span(IngestReport& report, const DayAccumulator& acc) {
  report.first_day = -1;
  report.last_day = -1;
  for (std::size_t d = 0; d < acc.days.size(); ++d) {
    if (acc.days[d].first == 0 && acc.days[d].second == 0) continue;
    if (report.first_day < 0) report.first_day = static_cast<std::int64_t>(d);
    report.last_day = static_cast<std::int64_t>(d);
  }
}

// Extracts (ts seconds, size bytes) from one JSONL record; returns a reason
// string on failure.
std::optional<std::string> extract_record(const json& j, std::int64_t& ts_out,
                                          std::int64_t& size_out) {
  const auto ts_it = j.find("ts");
  if (ts_it == j.end()) return "missing field: ts";
  if (ts_it->is_number_integer() || ts_it->is_number_unsigned()) {
    ts_out = ts_it->get<std::int64_t>();
  } else if (ts_it->is_string()) {
    try {
      ts_out = parse_iso8601(ts_it->get<std::string>());
    } catch (const ParseError& e) {
      return std::string("bad ts: ") + e.what();
    }
  } else {
    return "ts must be an ISO-8601 string or integer epoch-seconds";
  }
  const auto size_it = j.find("size_bytes");
  if (size_it == j.end()) return "missing field: size_bytes";
  if (!size_it->is_number_integer() && !size_it->is_number_unsigned()) {
    return "size_bytes must be an integer";
  }
  size_out = size_it->get<std::int64_t>();
  if (size_out < 1) return "size_bytes must be >= 1";
  return std::nullopt;
}

}  // namespace

std::int64_t parse_iso8601(const std::string& text) {
  int year = 0, month = 0, day = 0, hour = 0, minute = 0, second = 0;
  int consumed = 0;
  std::int64_t offset_seconds = 0;
  bool have_time = false;

  if (std::sscanf(text.c_str(), "%4d-%2d-%2d%n", &year, &month, &day, &consumed) != 3 ||
      consumed != 10) {
    throw ParseError("unrecognized ISO-8601 timestamp: " + text);
  }
  std::size_t pos = 10;
  if (pos < text.size() && (text[pos] == 'T' || text[pos] == ' ')) {
    have_time = true;
    int time_consumed = 0;
    if (std::sscanf(text.c_str() + pos + 1, "%2d:%2d:%2d%n", &hour, &minute, &second,
                    &time_consumed) != 3 ||
        time_consumed != 8) {
      throw ParseError("unrecognized ISO-8601 timestamp: " + text);
    }
    pos += 1 + 8;
    // Fractional seconds are accepted and truncated.
    if (pos < text.size() && text[pos] == '.') {
      ++pos;
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
        throw ParseError("unrecognized ISO-8601 timestamp: " + text);
      }
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    }
  }
  if (pos < text.size()) {
    if (text[pos] == 'Z' && pos + 1 == text.size()) {
      pos += 1;
    } else if ((text[pos] == '+' || text[pos] == '-') && have_time) {
      int oh = 0, om = 0, sign = text[pos] == '-' ? -1 : 1;
      int tz_consumed = 0;
      if (std::sscanf(text.c_str() + pos + 1, "%2d:%2d%n", &oh, &om, &tz_consumed) == 2 &&
          tz_consumed == 5 && pos + 6 == text.size()) {
        offset_seconds = sign * (oh * 3600 + om * 60);
        pos += 6;
      } else if (std::sscanf(text.c_str() + pos + 1, "%2d%2d%n", &oh, &om, &tz_consumed) == 2 &&
                 tz_consumed == 4 && pos + 5 == text.size()) {
        offset_seconds = sign * (oh * 3600 + om * 60);
        pos += 5;
      } else {
        throw ParseError("unrecognized ISO-8601 timestamp: " + text);
      }
    } else {
      throw ParseError("unrecognized ISO-8601 timestamp: " + text);
    }
  }
  if (month < 1 || month > 12 || day < 1 ||
      day > static_cast<int>(days_in_month(year, static_cast<unsigned>(month))) || hour > 23 ||
      minute > 59 || second > 59) {
    throw ParseError("out-of-range date/time field: " + text);
  }
  const std::int64_t days = days_from_civil(year, static_cast<unsigned>(month),
                                            static_cast<unsigned>(day));
  return days * kSecondsPerDay + hour * 3600 + minute * 60 + second - offset_seconds;
}

IngestResult parse_entry_lines(std::istream& source, std::optional<std::int64_t> epoch_seconds,
                               bool strict, const std::string& source_path) {
  if (!source.good()) throw IoError("cannot read entry stream: " + source_path);

  IngestResult result;
  result.report.source_path = source_path;

  struct Record {
    std::int64_t ts;
    std::int64_t size;
    std::size_t line;
  };

  // Timestamps are buffered so the default epoch (midnight of the earliest
  // entry) can be derived before bucketing.
  std::vector<Record> records;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(source, line)) {
    ++line_number;
    const std::string_view trimmed = trim(line);
    if (trimmed.empty()) continue;
    const json j = json::parse(trimmed, nullptr, /*allow_exceptions=*/false);
    std::string reason;
    std::int64_t ts = 0;
    std::int64_t size = 0;
    if (j.is_discarded()) {
      reason = "invalid JSON";
    } else if (!j.is_object()) {
      reason = "record is not a JSON object";
    } else if (auto err = extract_record(j, ts, size)) {
      reason = *err;
    } else if (epoch_seconds && ts < *epoch_seconds) {
      reason = "timestamp precedes the epoch";
    } else {
      records.push_back(Record{ts, size, line_number});
      continue;
    }
    if (strict) {
      throw ParseError("line " + std::to_string(line_number) + ": " + reason, line_number);
    }
    add_rejection(result.report, line_number, reason);
  }
  if (source.bad()) throw IoError("I/O failure while reading: " + source_path);

  if (records.empty()) return result;

  std::int64_t epoch = 0;
  if (epoch_seconds) {
    epoch = *epoch_seconds;
  } else {
    std::int64_t min_ts = records.front().ts;
    for (const Record& r : records) min_ts = std::min(min_ts, r.ts);
    epoch = floor_div(min_ts, kSecondsPerDay) * kSecondsPerDay;
  }

  DayAccumulator acc;
  for (const Record& r : records) {
    const std::int64_t day = floor_div(r.ts - epoch, kSecondsPerDay);
    if (day > kMaxDaySpan) {
      const std::string reason = "timestamp lies more than " + std::to_string(kMaxDaySpan) +
                                 " days past the epoch";
      if (strict) throw ParseError("line " + std::to_string(r.line) + ": " + reason, r.line);
      add_rejection(result.report, r.line, reason);
      continue;
    }
    ++result.report.records_read;
    acc.add(day, 1, static_cast<std::uint64_t>(r.size));
  }
  result.profile = acc.to_profile();
  fill_day_span(result.report, acc);
  return result;
}

IngestResult parse_daily_csv(std::istream& source, bool strict, const std::string& source_path) {
  if (!source.good()) throw IoError("cannot read CSV stream: " + source_path);

  IngestResult result;
  result.report.source_path = source_path;

  std::string line;
  std::size_t line_number = 0;
  if (!std::getline(source, line)) {
    throw ParseError("empty CSV: expected header \"day,entries,bytes\"", 1);
  }
  ++line_number;
  if (trim(line) != "day,entries,bytes") {
    throw ParseError("bad CSV header (expected \"day,entries,bytes\"): " + std::string(trim(line)),
                     1);
  }

  struct Row {
    std::int64_t day_key;  // integer index, or days-since-epoch for date rows
    std::uint64_t entries;
    std::uint64_t bytes;
    std::size_t line;
  };
  std::vector<Row> rows;
  bool date_mode = false;
  bool mode_known = false;

  while (std::getline(source, line)) {
    ++line_number;
    const std::string_view trimmed = trim(line);
    if (trimmed.empty()) continue;

    std::string reason;
    do {
      const std::size_t c1 = trimmed.find(',');
      const std::size_t c2 = c1 == std::string_view::npos ? std::string_view::npos
                                                          : trimmed.find(',', c1 + 1);
      if (c1 == std::string_view::npos || c2 == std::string_view::npos ||
          trimmed.find(',', c2 + 1) != std::string_view::npos) {
        reason = "expected 3 comma-separated fields";
        break;
      }
      const std::string_view day_field = trim(trimmed.substr(0, c1));
      const std::string_view entries_field = trim(trimmed.substr(c1 + 1, c2 - c1 - 1));
      const std::string_view bytes_field = trim(trimmed.substr(c2 + 1));

      std::int64_t day_key = 0;
      bool is_date = false;
      if (!parse_int(day_field, day_key)) {
        try {
          day_key = parse_iso8601(std::string(day_field)) / kSecondsPerDay;
          is_date = true;
        } catch (const ParseError&) {
          reason = "day must be a 0-based integer or ISO date";
          break;
        }
      }
      if (mode_known && is_date != date_mode) {
        throw ParseError("line " + std::to_string(line_number) +
                             ": mixed integer and date day values",
                         line_number);
      }

      std::int64_t entries = 0, bytes = 0;
      if (!parse_int(entries_field, entries) || !parse_int(bytes_field, bytes)) {
        reason = "entries and bytes must be integers";
        break;
      }
      if (!is_date && day_key < 0) {
        reason = "negative day index";
        break;
      }
      if (!is_date && day_key > kMaxDaySpan) {
        reason = "day index too large";
        break;
      }
      if (entries < 0 || bytes < 0) {
        reason = "negative entries or bytes";
        break;
      }
      if ((entries == 0) != (bytes == 0)) {
        reason = "entries and bytes must be zero together";
        break;
      }

      mode_known = true;
      date_mode = is_date;
      rows.push_back(Row{day_key, static_cast<std::uint64_t>(entries),
                         static_cast<std::uint64_t>(bytes), line_number});
    } while (false);

    if (!reason.empty()) {
      if (strict) {
        throw ParseError("line " + std::to_string(line_number) + ": " + reason, line_number);
      }
      add_rejection(result.report, line_number, reason);
    }
  }
  if (source.bad()) throw IoError("I/O failure while reading: " + source_path);

  if (rows.empty()) return result;

  if (date_mode) {
    std::int64_t min_key = rows.front().day_key;
    for (const Row& r : rows) min_key = std::min(min_key, r.day_key);
    for (Row& r : rows) r.day_key -= min_key;
  }

  std::vector<Row> sorted = rows;
  std::sort(sorted.begin(), sorted.end(),
            [](const Row& a, const Row& b) { return a.day_key < b.day_key; });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i].day_key == sorted[i - 1].day_key) {
      throw ParseError("line " + std::to_string(sorted[i].line) + ": duplicate day " +
                           std::to_string(sorted[i].day_key),
                       sorted[i].line);
    }
  }

  DayAccumulator acc;
  for (const Row& r : rows) {
    if (r.day_key > kMaxDaySpan) {  // date files spanning absurd ranges
      const std::string reason = "day lies more than " + std::to_string(kMaxDaySpan) +
                                 " days past the earliest row";
      if (strict) throw ParseError("line " + std::to_string(r.line) + ": " + reason, r.line);
      add_rejection(result.report, r.line, reason);
      continue;
    }
    ++result.report.records_read;
    acc.add(r.day_key, r.entries, r.bytes);
  }
  result.profile = acc.to_profile();
  fill_day_span(result.report, acc);
  return result;
}

void write_daily_csv(const DailyVolumeProfile& profile, std::ostream& out) {
  out << "day,entries,bytes\n";
  for (const DayVolume& day : profile.days) {
    out << day.day_index << ',' << day.entry_count << ',' << day.total_bytes << '\n';
  }
  if (!out) throw IoError("failed to write daily CSV");
}

void write_entries_jsonl(const std::vector<LogEntry>& entries, std::ostream& out) {
  for (const LogEntry& e : entries) {
    out << "{\"ts\":" << e.timestamp << ",\"size_bytes\":" << e.size_bytes << ",\"severity\":\""
        << severity_name(e.severity) << "\",\"service\":\"svc-" << e.service_id << "\"}\n";
  }
  if (!out) throw IoError("failed to write JSONL entries");
}

DailyVolumeProfile merge_profiles(const DailyVolumeProfile& a, const DailyVolumeProfile& b) {
  DayAccumulator acc;
  for (const DayVolume& day : a.days) acc.add(day.day_index, day.entry_count, day.total_bytes);
  for (const DayVolume& day : b.days) acc.add(day.day_index, day.entry_count, day.total_bytes);
  return acc.to_profile();
}

}  // namespace logret
