#include "lcmq/bounds.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

#include "lcmq/poly.hpp"

namespace lcmq {

namespace {

void require_triple(const Integer& c, long m, long n) {
  if (c < 1) throw std::invalid_argument("c must be >= 1");
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  if (m > n) throw std::invalid_argument("requires m <= n");
}

Integer shifted_square(long k, const Integer& c) { return Integer(k) * k + c; }

Integer factorial(long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer binomial(long n, long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

bool divisible(const Integer& a, const Integer& b) { return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0; }

Real log_lambda_base(const Integer& c) {
  const Real p = pi();
  return -2 * p * p * to_real(c) / 3 - log(to_real(c));
}

Real log_lambda1(const Integer& c) { return log_lambda_base(c); }
Real log_lambda2(const Integer& c) {
  return log_lambda_base(c) - Real(5) / 12 - Real(3) / 2 * log(2 * pi());
}
Real log_lambda3(const Integer& c) { return log_lambda_base(c) - Real(5) / 12 - Real(3) / 2 * log(pi()); }

}  // namespace

Integer big_lcm(const Integer& c, long m, long n) {
  require_triple(c, m, n);
  Integer L = 1;
  for (long k = m; k <= n; ++k) {
    const Integer t = shifted_square(k, c);
    mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), t.get_mpz_t());
  }
  return L;
}

Rational divisor_D(const Integer& c, long m, long n) {
  const TripleProducts t = triple_products(c, m, n);
  Rational D(t.numerator, c * t.factorial * t.four_c_prod);
  D.canonicalize();
  return D;
}

Integer hc_product(const Integer& c, long m, long n) {
  require_triple(c, m, n);
  return h_c(prod_shifted(c, m, n));
}

Integer hc_bound_d(const Integer& c, long k) { return certificate_modulus(c, k); }

TripleProducts triple_products(const Integer& c, long m, long n) {
  require_triple(c, m, n);
  TripleProducts t{big_lcm(c, m, n), 1, factorial(n - m), 1, prod_shifted(c, m, n)};
  for (long k = m; k <= n; ++k) t.numerator *= shifted_square(k, c);
  for (long k = 1; k <= n - m; ++k) t.four_c_prod *= shifted_square(k, 4 * c);
  return t;
}

DivisorReport assemble_divisor_report(const Integer& c, long m, long n, const TripleProducts& t) {
  auto fail = [&](const std::string& what) {
    std::ostringstream msg;
    msg << "(c=" << c << ", m=" << m << ", n=" << n << "): " << what;
    throw InvariantViolation(msg.str());
  };

  DivisorReport r;
  r.c = c;
  r.m = m;
  r.n = n;
  r.L = t.L;
  r.numerator = t.numerator;
  r.denominator = c * t.factorial * t.four_c_prod;
  r.D = Rational(r.numerator, r.denominator);
  r.D.canonicalize();

  // L / D = L·den / num
  const Integer scaled = r.L * r.denominator;
  if (!divisible(scaled, r.numerator)) fail("L is not a multiple of D");
  mpz_divexact(r.quotient.get_mpz_t(), scaled.get_mpz_t(), r.numerator.get_mpz_t());

  r.hc_value = h_c(t.shifted);
  r.hc_bound = c * t.four_c_prod;
  if (!divisible(r.hc_bound, r.hc_value)) fail("h_c of the shifted product does not divide c prod(k^2+4c)");

  const Integer scaled_L = r.L * t.factorial;
  if (!divisible(scaled_L * r.hc_value, r.numerator))
    fail("L (n-m)! h_c is not a multiple of prod(k^2+c)");
  try {
    const QuadInt star = divide_exact(QuadInt(scaled_L, 0, c), t.shifted);
    r.star_x = star.re();
    r.star_y = star.im();
  } catch (const NotExactDivision&) {
    fail("L (n-m)! is not a multiple of prod(k + sqrt(-c)) in Z[sqrt(-c)]");
  }
  return r;
}

DivisorReport verify_t7_divisor(const Integer& c, long m, long n) {
  return assemble_divisor_report(c, m, n, triple_products(c, m, n));
}

OonChecks oon_checks_against(long m, long n, const Integer& L) {
  if (m < 1 || m > n) throw std::invalid_argument("oon_checks: requires 1 <= m <= n");
  OonChecks out;
  out.binom_ok = L >= Integer(m) * binomial(n, m);
  if (m <= (n + 1) / 2) {
    Integer two_n;
    mpz_ui_pow_ui(two_n.get_mpz_t(), 2, static_cast<unsigned long>(n));
    out.two_n_ok = L >= two_n;
  }
  return out;
}

OonChecks oon_checks(const Integer& c, long m, long n) { return oon_checks_against(m, n, big_lcm(c, m, n)); }

Real lambda1(const Integer& c) { return exp(log_lambda1(c)); }
Real lambda2(const Integer& c) { return exp(log_lambda2(c)); }
Real lambda3(const Integer& c) { return exp(log_lambda3(c)); }

long half_two_thirds_floor(long n) {
  if (n < 0) throw std::invalid_argument("half_two_thirds_floor: n must be nonnegative");
  const Integer n2 = Integer(n) * n;
  auto fits = [&](long f) { return 8 * Integer(f) * f * f <= n2; };
  long f = static_cast<long>(std::cbrt(static_cast<double>(n) * static_cast<double>(n) / 8.0));
  while (f > 0 && !fits(f)) --f;
  while (fits(f + 1)) ++f;
  return f;
}

bool c5_applicable(long m, long n) {
  if (m < 1 || m > n) return false;
  const Integer g = n - m;
  return 8 * g * g * g >= Integer(n) * n;
}

bool final_applicable(long m, long n) {
  if (m < 1 || m > n) return false;
  const Integer g = n - m;
  return 8 * g * g * g <= Integer(n) * n;
}

std::string_view bound_name(Bound b) {
  switch (b) {
    case Bound::oon_2n: return "oon_2n";
    case Bound::binom: return "binom";
    case Bound::t7: return "t7";
    case Bound::t9: return "t9";
    case Bound::c5: return "c5";
    case Bound::final_: return "final";
    case Bound::farhi: return "farhi";
  }
  return "?";
}

bool BoundReport::all_hold() const {
  for (const auto& b : bounds)
    if (b.applicable && !b.holds) return false;
  return true;
}

LogFactorials::LogFactorials(long n_max) {
  if (n_max < 0) throw std::invalid_argument("LogFactorials: n_max must be nonnegative");
  table_.reserve(static_cast<std::size_t>(n_max + 1));
  table_.emplace_back(0);
  for (long j = 1; j <= n_max; ++j) table_.push_back(table_.back() + log(Real(j)));
}

const Real& LogFactorials::operator()(long n) const {
  if (n < 0 || n > max()) throw std::out_of_range("LogFactorials: index outside the table");
  return table_[static_cast<std::size_t>(n)];
}

BoundReport evaluate_bounds(const Integer& c, long m, long n, const Integer& L, const LogFactorials& lf) {
  require_triple(c, m, n);
  BoundReport rep;
  rep.c = c;
  rep.m = m;
  rep.n = n;
  rep.logL = log_of(L);

  const long g = n - m;
  const Real log_m = log(Real(m));
  const Real log_n = log(Real(n));
  auto set = [&](Bound b, bool applicable, auto&& value) {
    BoundValue& v = rep.bounds[static_cast<std::size_t>(b)];
    v.applicable = applicable;
    if (!applicable) return;
    v.log_value = value();
    v.holds = rep.logL >= v.log_value - kLogTolerance * abs(v.log_value);
  };

  set(Bound::oon_2n, m <= (n + 1) / 2, [&] { return n * log(Real(2)); });
  set(Bound::binom, true, [&] { return log_of(Integer(m) * binomial(n, m)); });
  set(Bound::t7, true, [&] { return log_lambda1(c) + 2 * log_m + 2 * lf(n) - 2 * lf(m) - 3 * lf(g); });
  set(Bound::t9, m < n, [&] {
    const Real log_g = log(Real(g));
    return log_lambda2(c) + log_n + log_m - Real(3) / 2 * log_g + g * (2 * log_m - 3 * log_g) + 3 * g;
  });
  set(Bound::c5, c5_applicable(m, n), [&] {
    const Real base = Real(n) - pow(Real(n), Real(2) / 3) / 2;
    return log_lambda3(c) + log(base) + half_two_thirds_floor(n) * (log(Real(2)) + 3);
  });
  set(Bound::final_, final_applicable(m, n), [&] { return log_lambda2(c) + log_n + 3 * g; });
  set(Bound::farhi, c == 1 && m == 1, [&] {
    return log(to_real(Rational(32, 100))) + n * log(to_real(Rational(1442, 1000)));
  });
  return rep;
}

BoundReport bound_report(const Integer& c, long m, long n) {
  require_triple(c, m, n);
  BoundReport rep = evaluate_bounds(c, m, n, big_lcm(c, m, n), LogFactorials(n));
  for (Bound b : kAllBounds) {
    if (!rep[b].applicable || rep[b].holds) continue;
    std::ostringstream msg;
    msg << "(c=" << c << ", m=" << m << ", n=" << n << "): bound " << bound_name(b) << " = "
        << format_real(rep[b].log_value) << " exceeds log L = " << format_real(rep.logL);
    throw InvariantViolation(msg.str());
  }
  return rep;
}

bool stirling_check(long k, const LogFactorials& lf) {
  if (k < 1) throw std::invalid_argument("stirling_check: k must be >= 1");
  const Real rk(k);
  const Real lower = rk * log(rk) - rk + log(2 * pi() * rk) / 2;
  const Real upper = lower + 1 / (12 * rk);
  const Real& exact = lf(k);
  return lower <= exact && exact <= upper;
}

bool stirling_check(long k) { return stirling_check(k, LogFactorials(k)); }

}  // namespace lcmq
