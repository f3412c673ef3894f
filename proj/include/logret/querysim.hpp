#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "logret/retention.hpp"

namespace logret {

// Probability mass over the age of the logs a query targets. Buckets are
// half-open (age_lo, age_hi] days, ordered and non-overlapping.
struct AgeBucket {
  double age_lo_days = 0.0;
  double age_hi_days = 0.0;
  double probability = 0.0;

  bool operator==(const AgeBucket&) const = default;
};

struct AccessDistribution {
  std::vector<AgeBucket> buckets;
  std::string name;

  double max_age_days() const {
    return buckets.empty() ? 0.0 : buckets.back().age_hi_days;
  }
  void validate() const;
};

// One operational query, reduced to the age of the oldest entry it needs:
// oldest required age = age_days + span_days. span_days = 0 is a point query.
struct Query {
  double age_days = 0.0;
  double span_days = 0.0;

  bool operator==(const Query&) const = default;
};

struct QueryWorkload {
  std::vector<Query> queries;
  std::uint64_t seed = 0;
  std::string distribution_name;
};

// Built-in distributions: "sre-default" (0,7]:0.80 (7,30]:0.15 (30,90]:0.05
// and "table2" (0,7]:0.95 (7,14]:0.02 (14,30]:0.01 (30,90]:0.02.
AccessDistribution preset_distribution(const std::string& name);
std::vector<std::string> preset_distribution_names();

// Draws query #ordinal of the workload keyed by (seed, ordinal); shared by
// the parallel kernel and the serial reference.
Query sample_query_at(const AccessDistribution& dist, std::uint64_t seed,
                      std::int64_t ordinal, double span_days);

// Samples `count` queries; bucket by mass, then age uniform within the
// bucket. Deterministic in (dist, count, seed, span_days) regardless of
// thread schedule.
QueryWorkload sample_queries(const AccessDistribution& dist, std::int64_t count,
                             std::uint64_t seed, double span_days = 0.0);

// A query is satisfied iff its oldest required entry is still retained.
bool is_satisfied(const Query& q, const RetentionPolicy& policy);

std::int64_t satisfied_count(const QueryWorkload& workload, const RetentionPolicy& policy);

// Satisfied fraction of a sampled workload. Throws UndefinedRatioError on an
// empty workload.
double ulr(const QueryWorkload& workload, const RetentionPolicy& policy);

// Closed-form expected ULR under uniform-in-bucket ages: the exact value the
// Monte Carlo estimate converges to. Double-precision sums over at most a
// handful of buckets; error stays below 1e-12.
double analytic_ulr(const AccessDistribution& dist, const RetentionPolicy& policy,
                    double span_days = 0.0);

}  // namespace logret
