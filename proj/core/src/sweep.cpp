#include "lcmq/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace lcmq {

void SweepConfig::validate() const {
  if (c_min < 1) throw std::invalid_argument("c-min must be >= 1");
  if (c_min > c_max) throw std::invalid_argument("c-min must not exceed c-max");
  if (n_min < 1) throw std::invalid_argument("n-min must be >= 1");
  if (n_min > n_max) throw std::invalid_argument("n-min must not exceed n-max");
  if (m_policy == MPolicy::fixed && fixed_m < 1) throw std::invalid_argument("fixed m must be >= 1");
  if (parallelism < 1) throw std::invalid_argument("parallelism must be >= 1");
}

std::vector<long> m_values(const SweepConfig& config, long n) {
  switch (config.m_policy) {
    case MPolicy::all: {
      std::vector<long> ms(static_cast<std::size_t>(n));
      for (long m = 1; m <= n; ++m) ms[static_cast<std::size_t>(m - 1)] = m;
      return ms;
    }
    case MPolicy::half_ceil: return {(n + 1) / 2};
    case MPolicy::fixed:
      if (config.fixed_m <= n) return {config.fixed_m};
      return {};
    case MPolicy::frontier: return {n - half_two_thirds_floor(n)};
  }
  return {};
}

namespace {

SweepRow make_row(long c, long m, long n, const TripleProducts& t, const LogFactorials& lf) {
  SweepRow row;
  row.c = c;
  row.m = m;
  row.n = n;
  std::vector<std::string> problems;
  try {
    row.divisor = assemble_divisor_report(c, m, n, t);
  } catch (const InvariantViolation& e) {
    problems.emplace_back(e.what());
  }
  row.oon = oon_checks_against(m, n, t.L);
  if (!row.oon->binom_ok) problems.emplace_back("L < m C(n,m)");
  if (row.oon->two_n_ok && !*row.oon->two_n_ok) problems.emplace_back("L < 2^n");
  row.bounds = evaluate_bounds(c, m, n, t.L, lf);
  for (Bound b : kAllBounds) {
    const BoundValue& v = (*row.bounds)[b];
    if (v.applicable && !v.holds) problems.emplace_back("bound " + std::string(bound_name(b)) + " exceeds log L");
  }
  for (std::size_t i = 0; i < problems.size(); ++i) row.violation += (i ? "; " : "") + problems[i];
  return row;
}

}  // namespace

std::vector<SweepRow> sweep_column(long c, long n, const std::vector<long>& ms, const LogFactorials& lf) {
  std::vector<long> wanted = ms;
  std::sort(wanted.begin(), wanted.end());
  wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());
  if (wanted.empty()) return {};
  if (wanted.front() < 1 || wanted.back() > n) throw std::invalid_argument("sweep_column: m outside [1, n]");

  const Integer cz = c;
  TripleProducts t{1, 1, 1, 1, QuadInt::one(cz)};
  std::vector<SweepRow> rows;
  rows.reserve(wanted.size());
  auto next = wanted.rbegin();
  for (long m = n; m >= wanted.front(); --m) {
    const Integer term = Integer(m) * m + cz;
    mpz_lcm(t.L.get_mpz_t(), t.L.get_mpz_t(), term.get_mpz_t());
    t.numerator *= term;
    t.shifted = QuadInt(Integer(m), Integer(1), cz) * t.shifted;
    if (const long k = n - m; k >= 1) {
      t.factorial *= k;
      t.four_c_prod *= Integer(k) * k + 4 * cz;
    }
    if (m == *next) {
      rows.push_back(make_row(c, m, n, t, lf));
      ++next;
    }
  }
  std::reverse(rows.begin(), rows.end());
  return rows;
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  config.validate();
  struct Item {
    long c;
    long n;
    std::vector<long> ms;
  };
  std::vector<Item> items;
  for (long c = config.c_min; c <= config.c_max; ++c)
    for (long n = config.n_min; n <= config.n_max; ++n)
      if (auto ms = m_values(config, n); !ms.empty()) items.push_back({c, n, std::move(ms)});

  const LogFactorials lf(config.n_max);
  std::vector<std::vector<SweepRow>> results(items.size());
  std::atomic<std::size_t> cursor{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (std::size_t i = cursor++; i < items.size(); i = cursor++) {
      try {
        results[i] = sweep_column(items[i].c, items[i].n, items[i].ms, lf);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::min<std::size_t>(config.parallelism, std::max<std::size_t>(items.size(), 1));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<SweepRow> rows;
  for (auto& r : results) std::move(r.begin(), r.end(), std::back_inserter(rows));
  return rows;
}

}  // namespace lcmq
