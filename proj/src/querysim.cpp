#include "logret/querysim.hpp"

#include <cmath>

#include "logret/errors.hpp"
#include "logret/rng.hpp"

namespace logret {

namespace {

constexpr double kMassSumTolerance = 1e-9;

}  // namespace

void AccessDistribution::validate() const {
  if (buckets.empty()) throw ConfigError("access distribution has no buckets");
  double sum = 0.0;
  double prev_hi = 0.0;
  for (std::size_t i = 0; i < buckets.size(); ++i) {
    const AgeBucket& b = buckets[i];
    if (b.age_lo_days < 0.0) throw ConfigError("bucket age_lo must be >= 0");
    if (!(b.age_hi_days > b.age_lo_days)) throw ConfigError("bucket age_hi must exceed age_lo");
    if (b.probability < 0.0 || b.probability > 1.0) {
      throw ConfigError("bucket probability must be in [0, 1]");
    }
    if (i > 0 && b.age_lo_days < prev_hi) {
      throw ConfigError("buckets must be ordered by age_lo and non-overlapping");
    }
    prev_hi = b.age_hi_days;
    sum += b.probability;
  }
  if (std::abs(sum - 1.0) > kMassSumTolerance) {
    throw ConfigError("bucket probabilities must sum to 1");
  }
}

AccessDistribution preset_distribution(const std::string& name) {
  if (name == "sre-default") {
    return AccessDistribution{
        {{0.0, 7.0, 0.80}, {7.0, 30.0, 0.15}, {30.0, 90.0, 0.05}}, "sre-default"};
  }
  if (name == "table2") {
    return AccessDistribution{
        {{0.0, 7.0, 0.95}, {7.0, 14.0, 0.02}, {14.0, 30.0, 0.01}, {30.0, 90.0, 0.02}},
        "table2"};
  }
  throw ConfigError("unknown distribution preset: " + name);
}

std::vector<std::string> preset_distribution_names() { return {"sre-default", "table2"}; }

Query sample_query_at(const AccessDistribution& dist, std::uint64_t seed,
                      std::int64_t ordinal, double span_days) {
  CounterRng rng(stream_key(seed, kStreamQuery, static_cast<std::uint64_t>(ordinal)));
  // Draw order is fixed: bucket selector first, then position within bucket.
  const double pick = rng.next_unit();
  double cumulative = 0.0;
  const AgeBucket* chosen = &dist.buckets.back();
  for (const AgeBucket& b : dist.buckets) {
    cumulative += b.probability;
    if (pick < cumulative) {
      chosen = &b;
      break;
    }
  }
  // Map u in [0,1) to (lo, hi] so bucket-edge ages land inside the bucket,
  // matching the half-open interval convention.
  const double u = rng.next_unit();
  const double age =
      chosen->age_lo_days + (1.0 - u) * (chosen->age_hi_days - chosen->age_lo_days);
  return Query{age, span_days};
}

QueryWorkload sample_queries(const AccessDistribution& dist, std::int64_t count,
                             std::uint64_t seed, double span_days) {
  dist.validate();
  if (count < 0) throw ConfigError("sample_queries: count must be >= 0");
  if (span_days < 0.0) throw ConfigError("sample_queries: span_days must be >= 0");
  QueryWorkload workload;
  workload.seed = seed;
  workload.distribution_name = dist.name;
  workload.queries.resize(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) {
    workload.queries[static_cast<std::size_t>(i)] = sample_query_at(dist, seed, i, span_days);
  }
  return workload;
}

bool is_satisfied(const Query& q, const RetentionPolicy& policy) {
  return q.age_days + q.span_days <= static_cast<double>(policy.window_days);
}

std::int64_t satisfied_count(const QueryWorkload& workload, const RetentionPolicy& policy) {
  policy.validate();
  const auto n = static_cast<std::int64_t>(workload.queries.size());
  std::int64_t satisfied = 0;
#pragma omp parallel for schedule(static) reduction(+ : satisfied)
  for (std::int64_t i = 0; i < n; ++i) {
    if (is_satisfied(workload.queries[static_cast<std::size_t>(i)], policy)) ++satisfied;
  }
  return satisfied;
}

double ulr(const QueryWorkload& workload, const RetentionPolicy& policy) {
  if (workload.queries.empty()) {
    throw UndefinedRatioError("ulr: empty query workload");
  }
  return static_cast<double>(satisfied_count(workload, policy)) /
         static_cast<double>(workload.queries.size());
}

double analytic_ulr(const AccessDistribution& dist, const RetentionPolicy& policy,
                    double span_days) {
  dist.validate();
  policy.validate();
  // A query with age a and span s is satisfied iff a <= window - s.
  const double threshold = static_cast<double>(policy.window_days) - span_days;
  double total = 0.0;
  for (const AgeBucket& b : dist.buckets) {
    if (threshold >= b.age_hi_days) {
      total += b.probability;
    } else if (threshold > b.age_lo_days) {
      total += b.probability * (threshold - b.age_lo_days) /
               (b.age_hi_days - b.age_lo_days);
    }
  }
  return total;
}

}  // namespace logret
