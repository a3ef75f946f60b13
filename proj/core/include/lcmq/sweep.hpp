#pragma once

// Grid sweeps over (c, m, n). Work is split by (c, n); for each pair the
// products behind L_{c,m,n} are maintained incrementally while m walks down.
// Rows come back in (c, n, m) lexicographic order for any thread count.

#include <optional>
#include <string>
#include <vector>

#include "lcmq/bounds.hpp"

namespace lcmq {

enum class MPolicy { all, half_ceil, fixed, frontier };
enum class OutputFormat { csv, json };

struct SweepConfig {
  long c_min = 1;
  long c_max = 1;
  long n_min = 1;
  long n_max = 1;
  MPolicy m_policy = MPolicy::all;
  long fixed_m = 1;  // used by MPolicy::fixed
  OutputFormat output_format = OutputFormat::csv;
  unsigned parallelism = 1;

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
};

/// The m values a policy selects for a given n, ascending.
std::vector<long> m_values(const SweepConfig& config, long n);

struct SweepRow {
  long c = 0;
  long m = 0;
  long n = 0;
  std::optional<DivisorReport> divisor;
  std::optional<BoundReport> bounds;
  std::optional<OonChecks> oon;
  std::string violation;  // empty when every check passed

  bool ok() const { return violation.empty(); }
};

/// Rows for one (c, n) column and the requested m values (any order).
std::vector<SweepRow> sweep_column(long c, long n, const std::vector<long>& ms, const LogFactorials& lf);

std::vector<SweepRow> run_sweep(const SweepConfig& config);

}  // namespace lcmq
