#pragma once

// Dense univariate polynomials over Q(√-c) and Z, and the explicit Bézout
// cofactor α_k of P_k(X) = (X+√-c)(X-1+√-c)⋯(X-k+√-c) against its conjugate.

#include <utility>
#include <vector>

#include "lcmq/ring.hpp"

namespace lcmq {

/// Polynomial in X over Q(√-c); coefficient i multiplies X^i. Always trimmed.
class QuadPoly {
 public:
  explicit QuadPoly(Integer c);
  QuadPoly(Integer c, std::vector<QuadRat> coeffs);

  static QuadPoly constant(const QuadRat& v);
  /// The polynomial X.
  static QuadPoly x(const Integer& c);
  /// X + v.
  static QuadPoly linear(const QuadRat& v);

  const Integer& param() const { return c_; }
  const std::vector<QuadRat>& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  QuadRat coeff(long i) const;
  const QuadRat& leading() const;

  QuadPoly operator-() const;
  QuadPoly& operator+=(const QuadPoly& o);
  QuadPoly& operator-=(const QuadPoly& o);
  QuadPoly& operator*=(const QuadPoly& o);
  QuadPoly& operator*=(const QuadRat& s);

  friend QuadPoly operator+(QuadPoly p, const QuadPoly& q) { return p += q; }
  friend QuadPoly operator-(QuadPoly p, const QuadPoly& q) { return p -= q; }
  friend QuadPoly operator*(QuadPoly p, const QuadPoly& q) { return p *= q; }
  friend QuadPoly operator*(QuadPoly p, const QuadRat& s) { return p *= s; }
  friend QuadPoly operator*(const QuadRat& s, QuadPoly p) { return p *= s; }

  friend bool operator==(const QuadPoly& p, const QuadPoly& q) {
    return p.c_ == q.c_ && p.coeffs_ == q.coeffs_;
  }

 private:
  void check(const Integer& c) const;
  void trim();

  Integer c_;
  std::vector<QuadRat> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const QuadPoly& p);

/// Polynomial with integer coefficients, trimmed.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Integer coeff(long i) const;
  Integer eval(const Integer& x) const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const Integer& s);
  friend IntPoly operator+(IntPoly p, const IntPoly& q) { return p += q; }
  friend IntPoly operator-(IntPoly p, const IntPoly& q) { return p -= q; }
  friend IntPoly operator*(IntPoly p, const Integer& s) { return p *= s; }
  friend IntPoly operator*(const Integer& s, IntPoly p) { return p *= s; }
  friend IntPoly operator*(const IntPoly& p, const IntPoly& q);
  friend bool operator==(const IntPoly& p, const IntPoly& q) = default;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPoly& p);

QuadPoly conj(const QuadPoly& p);
/// Horner evaluation.
QuadRat eval(const QuadPoly& p, const QuadRat& z);
/// p(X + h).
QuadPoly shift(const QuadPoly& p, const QuadRat& h);
/// Euclidean division over Q(√-c): returns (quotient, remainder).
std::pair<QuadPoly, QuadPoly> divmod(const QuadPoly& p, const QuadPoly& d);

/// Splits p = A + B√-c. Throws NotExactDivision if a coefficient is not in Z[√-c].
std::pair<IntPoly, IntPoly> split_AB(const QuadPoly& p);
/// A + B√-c.
QuadPoly combine(const IntPoly& A, const IntPoly& B, const Integer& c);

/// (X+√-c)(X-1+√-c)⋯(X-k+√-c); monic of degree k+1.
QuadPoly build_P(const Integer& c, long k);

/// Δ^order p, where Δp(X) = p(X+1) - p(X). Evaluated both by repeated
/// differencing and by the binomial sum over shifts; throws
/// InvariantViolation if the two disagree.
QuadPoly forward_difference(const QuadPoly& p, long order);

/// (X-√-c)(X-√-c-1)⋯(X-√-c-ℓ+1); 1 for ℓ = 0.
QuadPoly newton_basis(const Integer& c, long l);

/// (y)(y-1)⋯(y-n+1) in Q(√-c); 1 for n = 0.
QuadRat falling_factorial(const QuadRat& y, long n);

/// 1/P_k(w), with P_k(w) evaluated factor by factor. Throws PoleError if a
/// factor vanishes.
QuadRat reciprocal_P(const Integer& c, long k, const QuadRat& w);

/// (1/ℓ!) Σ_j (-1)^{ℓ-j} C(ℓ,j) / P_k(z + j + √-c).
QuadRat R_def(const Integer& c, long k, long l, const QuadRat& z);
/// (-1)^{k+ℓ} C(k+ℓ,ℓ) / ((z+2√-c) (k-2√-c-z)^{\underline k} (ℓ+2√-c+z)^{\underline ℓ}).
QuadRat R_closed(const Integer& c, long k, long l, const QuadRat& z);

/// Newton coefficient of α_k from the alternating sum of reciprocals.
QuadRat theta_def(const Integer& c, long k, long l);
/// The same coefficient from the closed product formula.
QuadRat theta_closed(const Integer& c, long k, long l);

/// α_k = Σ_ℓ θ_{k,ℓ}(X-√-c)^{\underline ℓ} with closed-form coefficients.
QuadPoly alpha_closed(const Integer& c, long k);
/// α_k assembled from the interpolation coefficients theta_def.
QuadPoly alpha_interp(const Integer& c, long k);

struct BezoutPair {
  QuadPoly u;
  QuadPoly v;
};

/// The unique (U, V) with PU + QV = 1, deg U < deg Q, deg V < deg P.
/// Throws std::invalid_argument on constant input and CommonFactorError when
/// P and Q share a factor.
BezoutPair bezout_general(const QuadPoly& P, const QuadPoly& Q);

/// Integer witness that h_c(P_k(n)) divides d for every integer n:
/// 2dα_k = r + s√-c and r·A - c·s·B = d with P_k = A + B√-c.
struct BezoutCertificate {
  Integer c;
  long k = 0;
  QuadPoly alpha{Integer(1)};
  IntPoly A;
  IntPoly B;
  IntPoly r;
  IntPoly s;
  Integer d;
};

/// c·∏_{ℓ=1}^{k}(ℓ² + 4c).
Integer certificate_modulus(const Integer& c, long k);

BezoutCertificate bezout_certificate(const Integer& c, long k);

/// Re-checks every certificate identity exactly; throws InvariantViolation.
void verify_certificate(const BezoutCertificate& cert);

}  // namespace lcmq
