#pragma once

// Exact arithmetic in Z[√-c] and Q(√-c).
//
// Every value carries its ring parameter c; combining values with different
// parameters throws RingMismatch.

#include <gmpxx.h>

#include <ostream>
#include <span>
#include <type_traits>
#include <utility>

#include "lcmq/errors.hpp"

namespace lcmq {

using Integer = mpz_class;
using Rational = mpq_class;

/// a + b√-c with components of type T (Integer or Rational).
template <class T>
class Quad {
 public:
  Quad(T a, T b, Integer c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    if (c_ < 1) throw std::invalid_argument("ring parameter c must be >= 1");
    canonicalize();
  }

  static Quad zero(const Integer& c) { return Quad(T(0), T(0), c); }
  static Quad one(const Integer& c) { return Quad(T(1), T(0), c); }
  /// The adjoined root √-c itself.
  static Quad root(const Integer& c) { return Quad(T(0), T(1), c); }

  const T& re() const { return a_; }
  const T& im() const { return b_; }
  const Integer& param() const { return c_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }

  Quad operator-() const { return Quad(T(-a_), T(-b_), c_, Trusted{}); }

  Quad& operator+=(const Quad& o) {
    check(o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  Quad& operator-=(const Quad& o) {
    check(o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  Quad& operator*=(const Quad& o) {
    check(o);
    T a = a_ * o.a_ - c_ * b_ * o.b_;
    b_ = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    return *this;
  }
  /// Scale both components by a base-ring element.
  Quad& operator*=(const T& s) {
    a_ *= s;
    b_ *= s;
    return *this;
  }

  friend Quad operator+(Quad x, const Quad& y) { return x += y; }
  friend Quad operator-(Quad x, const Quad& y) { return x -= y; }
  friend Quad operator*(Quad x, const Quad& y) { return x *= y; }
  friend Quad operator*(Quad x, const T& s) { return x *= s; }
  friend Quad operator*(const T& s, Quad x) { return x *= s; }

  friend bool operator==(const Quad& x, const Quad& y) {
    return x.c_ == y.c_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Quad& x) {
    os << x.a_ << (sgn(x.b_) < 0 ? "-" : "+") << abs(T(x.b_)) << "*sqrt(-" << x.c_ << ")";
    return os;
  }

 private:
  struct Trusted {};
  Quad(T a, T b, Integer c, Trusted) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}

  void check(const Quad& o) const {
    if (c_ != o.c_) throw RingMismatch("operands belong to different rings Z[sqrt(-c)]");
  }
  void canonicalize() {
    if constexpr (std::is_same_v<T, Rational>) {
      a_.canonicalize();
      b_.canonicalize();
    }
  }

  T a_;
  T b_;
  Integer c_;
};

using QuadInt = Quad<Integer>;
using QuadRat = Quad<Rational>;

/// a - b√-c.
template <class T>
Quad<T> conj(const Quad<T>& x) {
  return Quad<T>(x.re(), T(-x.im()), x.param());
}

/// a² + c·b², the squared complex modulus.
template <class T>
T norm(const Quad<T>& x) {
  return T(x.re() * x.re() + x.param() * x.im() * x.im());
}

QuadRat to_rat(const QuadInt& x);
bool is_integral(const QuadRat& x);
/// Throws NotExactDivision if a component is not an integer.
QuadInt to_int(const QuadRat& x);

/// Multiplicative inverse in Q(√-c) via conj(x)/norm(x). Throws std::domain_error on zero.
QuadRat inverse(const QuadRat& x);
QuadRat operator/(const QuadRat& x, const QuadRat& y);

/// gcd of the two components; defined on nonzero elements only.
Integer h_c(const QuadInt& x);

/// Whether z divides w in Z[√-c]. Zero divides only zero.
bool divides(const QuadInt& w, const QuadInt& z);

/// Whether the rational integer N is a multiple of z in Z[√-c], decided in Z
/// by checking that norm(z)/h_c(z) divides N.
bool is_multiple(const Integer& N, const QuadInt& z);

/// The q with q·z = w. Throws NotExactDivision if no such q exists in Z[√-c].
QuadInt divide_exact(const QuadInt& w, const QuadInt& z);

/// ∏_{k=m}^{n} (k + √-c).
QuadInt prod_shifted(const Integer& c, long m, long n);

/// Checks the divisibility conclusion ab ≡ 0 mod u_0⋯u_n after verifying that
/// every u_i divides a and every ∏_{j≠i}(u_i - u_j) divides b. Throws
/// HypothesisError if a hypothesis fails; the return value is the conclusion.
bool check_lemma_l1(std::span<const QuadInt> u, const QuadInt& a, const QuadInt& b);

}  // namespace lcmq
