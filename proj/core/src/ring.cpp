#include "lcmq/ring.hpp"

#include <string>
#include <vector>

namespace lcmq {

QuadRat to_rat(const QuadInt& x) {
  return QuadRat(Rational(x.re()), Rational(x.im()), x.param());
}

bool is_integral(const QuadRat& x) {
  return x.re().get_den() == 1 && x.im().get_den() == 1;
}

QuadInt to_int(const QuadRat& x) {
  if (!is_integral(x)) throw NotExactDivision("element has non-integral components");
  return QuadInt(x.re().get_num(), x.im().get_num(), x.param());
}

QuadRat inverse(const QuadRat& x) {
  if (x.is_zero()) throw std::domain_error("inverse of zero in Q(sqrt(-c))");
  const Rational n = norm(x);
  return QuadRat(Rational(x.re() / n), Rational(-x.im() / n), x.param());
}

QuadRat operator/(const QuadRat& x, const QuadRat& y) { return x * inverse(y); }

Integer h_c(const QuadInt& x) {
  if (x.is_zero()) throw std::domain_error("h_c is undefined at 0");
  Integer g;
  mpz_gcd(g.get_mpz_t(), x.re().get_mpz_t(), x.im().get_mpz_t());
  return g;
}

namespace {

// w·conj(z) when both of its components are divisible by norm(z).
bool try_divide(const QuadInt& w, const QuadInt& z, QuadInt* out) {
  if (w.param() != z.param()) throw RingMismatch("operands belong to different rings Z[sqrt(-c)]");
  if (z.is_zero()) {
    if (!w.is_zero()) return false;
    if (out) throw NotExactDivision("quotient 0/0 is not unique");
    return true;
  }
  const Integer n = norm(z);
  const QuadInt t = w * conj(z);
  if (!mpz_divisible_p(t.re().get_mpz_t(), n.get_mpz_t()) ||
      !mpz_divisible_p(t.im().get_mpz_t(), n.get_mpz_t())) {
    return false;
  }
  if (out) {
    Integer a, b;
    mpz_divexact(a.get_mpz_t(), t.re().get_mpz_t(), n.get_mpz_t());
    mpz_divexact(b.get_mpz_t(), t.im().get_mpz_t(), n.get_mpz_t());
    *out = QuadInt(std::move(a), std::move(b), z.param());
  }
  return true;
}

}  // namespace

bool divides(const QuadInt& w, const QuadInt& z) { return try_divide(w, z, nullptr); }

bool is_multiple(const Integer& N, const QuadInt& z) {
  if (z.is_zero()) throw std::domain_error("is_multiple: divisor must be nonzero");
  Integer criterion = norm(z);
  mpz_divexact(criterion.get_mpz_t(), criterion.get_mpz_t(), h_c(z).get_mpz_t());
  return mpz_divisible_p(N.get_mpz_t(), criterion.get_mpz_t()) != 0;
}

QuadInt divide_exact(const QuadInt& w, const QuadInt& z) {
  if (z.is_zero()) throw std::domain_error("divide_exact: division by zero");
  QuadInt q = QuadInt::zero(z.param());
  if (!try_divide(w, z, &q)) throw NotExactDivision("divide_exact: divisor does not divide dividend");
  return q;
}

QuadInt prod_shifted(const Integer& c, long m, long n) {
  if (m > n) throw std::invalid_argument("prod_shifted: requires m <= n");
  QuadInt p = QuadInt::one(c);
  for (long k = m; k <= n; ++k) p *= QuadInt(Integer(k), Integer(1), c);
  return p;
}

bool check_lemma_l1(std::span<const QuadInt> u, const QuadInt& a, const QuadInt& b) {
  if (u.empty()) throw std::invalid_argument("check_lemma_l1: need at least one u_i");
  const Integer& c = u.front().param();
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].param() != c || a.param() != c || b.param() != c)
      throw RingMismatch("check_lemma_l1: elements from different rings");
    if (!divides(a, u[i]))
      throw HypothesisError("u_" + std::to_string(i) + " does not divide a");
    QuadInt diff = QuadInt::one(c);
    for (std::size_t j = 0; j < u.size(); ++j)
      if (j != i) diff *= u[i] - u[j];
    if (!divides(b, diff))
      throw HypothesisError("prod_{j != " + std::to_string(i) + "}(u_i - u_j) does not divide b");
  }
  QuadInt all = QuadInt::one(c);
  for (const auto& x : u) all *= x;
  return divides(a * b, all);
}

}  // namespace lcmq
