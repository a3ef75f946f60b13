#pragma once

// L_{c,m,n} = lcm{m²+c, …, n²+c}: its exact rational divisor, the h_c
// divisibility behind it, and every lower bound derived from them.

#include <array>
#include <optional>
#include <string_view>

#include "lcmq/real.hpp"
#include "lcmq/ring.hpp"

namespace lcmq {

Integer big_lcm(const Integer& c, long m, long n);

/// ∏_{k=m}^{n}(k²+c) / (c·(n-m)!·∏_{k=1}^{n-m}(k²+4c)), reduced.
Rational divisor_D(const Integer& c, long m, long n);

/// h_c(∏_{k=m}^{n}(k+√-c)).
Integer hc_product(const Integer& c, long m, long n);

/// c·∏_{ℓ=1}^{k}(ℓ²+4c); a multiple of hc_product(c, m, m+k) for every m.
Integer hc_bound_d(const Integer& c, long k);

struct DivisorReport {
  Integer c;
  long m = 0;
  long n = 0;
  Integer L;
  Integer numerator;    // ∏(k²+c)
  Integer denominator;  // c·(n-m)!·∏(k²+4c)
  Rational D;
  Integer quotient;  // L / D
  Integer hc_value;
  Integer hc_bound;
  // (star_x + star_y√-c)·∏(k+√-c) = L·(n-m)!
  Integer star_x;
  Integer star_y;
};

/// The products a DivisorReport is assembled from. Lets sweeps that walk m
/// downwards maintain them incrementally instead of recomputing per triple.
struct TripleProducts {
  Integer L;
  Integer numerator;
  Integer factorial;     // (n-m)!
  Integer four_c_prod;   // ∏_{k=1}^{n-m}(k²+4c)
  QuadInt shifted;       // ∏_{k=m}^{n}(k+√-c)
};

TripleProducts triple_products(const Integer& c, long m, long n);

/// Fills a DivisorReport and checks it exactly: L/D is an integer, h_c of the
/// shifted product divides c∏(k²+4c), and L·(n-m)! is a multiple of the
/// shifted product in Z[√-c]. Throws InvariantViolation on failure.
DivisorReport assemble_divisor_report(const Integer& c, long m, long n, const TripleProducts& t);

DivisorReport verify_t7_divisor(const Integer& c, long m, long n);

struct OonChecks {
  bool binom_ok = false;              // L ≥ m·C(n,m)
  std::optional<bool> two_n_ok;       // L ≥ 2ⁿ, only for m ≤ ⌈n/2⌉
};

/// The same comparisons against a precomputed L.
OonChecks oon_checks_against(long m, long n, const Integer& L);
OonChecks oon_checks(const Integer& c, long m, long n);

Real lambda1(const Integer& c);
Real lambda2(const Integer& c);
Real lambda3(const Integer& c);

/// ⌊n^{2/3}/2⌋, i.e. the largest F ≥ 0 with 8F³ ≤ n², by integer arithmetic.
long half_two_thirds_floor(long n);
/// m ≤ n - n^{2/3}/2, decided exactly as 8(n-m)³ ≥ n².
bool c5_applicable(long m, long n);
/// n - n^{2/3}/2 ≤ m ≤ n, decided exactly as 8(n-m)³ ≤ n².
bool final_applicable(long m, long n);

enum class Bound { oon_2n, binom, t7, t9, c5, final_, farhi };
inline constexpr std::size_t kBoundCount = 7;
inline constexpr std::array<Bound, kBoundCount> kAllBounds = {
    Bound::oon_2n, Bound::binom, Bound::t7, Bound::t9, Bound::c5, Bound::final_, Bound::farhi};
std::string_view bound_name(Bound b);

/// Relative slack on log comparisons. Absorbs rounding of π and e only.
inline constexpr double kLogTolerance = 1e-9;

struct BoundValue {
  bool applicable = false;
  Real log_value;
  bool holds = true;  // logL ≥ log_value·(1 ∓ tolerance) whenever applicable
};

/// Lower bounds on L_{c,m,n}, all in natural-log space:
///   oon_2n  2ⁿ                                   (m ≤ ⌈n/2⌉)
///   binom   m·C(n,m)
///   t7      λ1(c)·m²·n!²/(m!²(n-m)!³)
///   t9      λ2(c)·nm/(n-m)^{3/2}·(m²/(n-m)³)^{n-m}·e^{3(n-m)}   (m < n)
///   c5      λ3(c)·(n - n^{2/3}/2)·(2e³)^{⌊n^{2/3}/2⌋}            (m ≤ n - n^{2/3}/2)
///   final   λ2(c)·n·e^{3(n-m)}                                  (n - n^{2/3}/2 ≤ m)
///   farhi   0.32·1.442ⁿ                                         (c = m = 1)
/// The heuristic optimum n - m ≈ n^{2/3 - 1/log n} that motivates c5 is not
/// asserted anywhere.
struct BoundReport {
  Integer c;
  long m = 0;
  long n = 0;
  Real logL;
  std::array<BoundValue, kBoundCount> bounds;

  const BoundValue& operator[](Bound b) const { return bounds[static_cast<std::size_t>(b)]; }
  bool all_hold() const;
};

/// log 0!, …, log N! as cumulative sums of log j.
class LogFactorials {
 public:
  explicit LogFactorials(long n_max);
  const Real& operator()(long n) const;
  long max() const { return static_cast<long>(table_.size()) - 1; }

 private:
  std::vector<Real> table_;
};

/// Computes all bounds against a known L without throwing on failure.
BoundReport evaluate_bounds(const Integer& c, long m, long n, const Integer& L, const LogFactorials& lf);

/// evaluate_bounds for a freshly computed L; throws InvariantViolation if an
/// applicable bound exceeds L.
BoundReport bound_report(const Integer& c, long m, long n);

/// k^k e^{-k} √(2πk) ≤ k! ≤ k^k e^{-k} √(2πk) e^{1/(12k)}, with log k! taken
/// from exact sums of logs.
bool stirling_check(long k);
bool stirling_check(long k, const LogFactorials& lf);

}  // namespace lcmq
