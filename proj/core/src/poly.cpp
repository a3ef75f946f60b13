#include "lcmq/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>

namespace lcmq {

namespace {

Integer binomial(long n, long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer factorial(long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

QuadRat scalar(const Rational& a, const Rational& b, const Integer& c) { return QuadRat(a, b, c); }

void require_theta_range(long k, long l) {
  if (k < 0 || l < 0) throw std::invalid_argument("indices k and l must be nonnegative");
  if (l > k) throw std::invalid_argument("requires l <= k");
}

}  // namespace

// QuadPoly

QuadPoly::QuadPoly(Integer c) : c_(std::move(c)) {
  if (c_ < 1) throw std::invalid_argument("ring parameter c must be >= 1");
}

QuadPoly::QuadPoly(Integer c, std::vector<QuadRat> coeffs) : QuadPoly(std::move(c)) {
  for (const auto& v : coeffs) check(v.param());
  coeffs_ = std::move(coeffs);
  trim();
}

QuadPoly QuadPoly::constant(const QuadRat& v) { return QuadPoly(v.param(), {v}); }

QuadPoly QuadPoly::x(const Integer& c) { return QuadPoly(c, {QuadRat::zero(c), QuadRat::one(c)}); }

QuadPoly QuadPoly::linear(const QuadRat& v) { return QuadPoly(v.param(), {v, QuadRat::one(v.param())}); }

QuadRat QuadPoly::coeff(long i) const {
  if (i < 0 || i > degree()) return QuadRat::zero(c_);
  return coeffs_[static_cast<std::size_t>(i)];
}

const QuadRat& QuadPoly::leading() const {
  if (is_zero()) throw std::domain_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

QuadPoly QuadPoly::operator-() const {
  QuadPoly r(c_);
  r.coeffs_.reserve(coeffs_.size());
  for (const auto& v : coeffs_) r.coeffs_.push_back(-v);
  return r;
}

QuadPoly& QuadPoly::operator+=(const QuadPoly& o) {
  check(o.c_);
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), QuadRat::zero(c_));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

QuadPoly& QuadPoly::operator-=(const QuadPoly& o) {
  check(o.c_);
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), QuadRat::zero(c_));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

QuadPoly& QuadPoly::operator*=(const QuadPoly& o) {
  check(o.c_);
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<QuadRat> out(coeffs_.size() + o.coeffs_.size() - 1, QuadRat::zero(c_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

QuadPoly& QuadPoly::operator*=(const QuadRat& s) {
  check(s.param());
  for (auto& v : coeffs_) v *= s;
  trim();
  return *this;
}

void QuadPoly::check(const Integer& c) const {
  if (c != c_) throw RingMismatch("polynomials over different fields Q(sqrt(-c))");
}

void QuadPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::ostream& operator<<(std::ostream& os, const QuadPoly& p) {
  os << '[';
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) os << (i ? ", " : "") << p.coeffs()[i];
  return os << ']';
}

// IntPoly

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Integer IntPoly::coeff(long i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

Integer IntPoly::eval(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const Integer& s) {
  for (auto& v : coeffs_) v *= s;
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<Integer> out(p.coeffs_.size() + q.coeffs_.size() - 1);
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) out[i + j] += p.coeffs_[i] * q.coeffs_[j];
  return IntPoly(std::move(out));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) {
  os << '[';
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) os << (i ? ", " : "") << p.coeffs()[i];
  return os << ']';
}

// Free functions

QuadPoly conj(const QuadPoly& p) {
  std::vector<QuadRat> out;
  out.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) out.push_back(conj(v));
  return QuadPoly(p.param(), std::move(out));
}

QuadRat eval(const QuadPoly& p, const QuadRat& z) {
  if (z.param() != p.param()) throw RingMismatch("evaluation point from a different field");
  QuadRat acc = QuadRat::zero(p.param());
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc *= z;
    acc += *it;
  }
  return acc;
}

QuadPoly shift(const QuadPoly& p, const QuadRat& h) {
  const QuadPoly step = QuadPoly::linear(h);
  QuadPoly acc(p.param());
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc *= step;
    acc += QuadPoly::constant(*it);
  }
  return acc;
}

std::pair<QuadPoly, QuadPoly> divmod(const QuadPoly& p, const QuadPoly& d) {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  if (p.param() != d.param()) throw RingMismatch("polynomials over different fields Q(sqrt(-c))");
  const Integer& c = p.param();
  const QuadRat lead_inv = inverse(d.leading());
  std::vector<QuadRat> rem = p.coeffs();
  const long dd = d.degree();
  const long qdeg = p.degree() - dd;
  if (qdeg < 0) return {QuadPoly(c), p};
  std::vector<QuadRat> quot(static_cast<std::size_t>(qdeg + 1), QuadRat::zero(c));
  for (long i = p.degree(); i >= dd; --i) {
    const QuadRat t = rem[static_cast<std::size_t>(i)] * lead_inv;
    if (t.is_zero()) continue;
    quot[static_cast<std::size_t>(i - dd)] = t;
    for (long j = 0; j <= dd; ++j)
      rem[static_cast<std::size_t>(i - dd + j)] -= t * d.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(dd), QuadRat::zero(c));
  return {QuadPoly(c, std::move(quot)), QuadPoly(c, std::move(rem))};
}

std::pair<IntPoly, IntPoly> split_AB(const QuadPoly& p) {
  std::vector<Integer> a, b;
  a.reserve(p.coeffs().size());
  b.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) {
    if (!is_integral(v)) throw NotExactDivision("split_AB: coefficient not in Z[sqrt(-c)]");
    a.push_back(v.re().get_num());
    b.push_back(v.im().get_num());
  }
  return {IntPoly(std::move(a)), IntPoly(std::move(b))};
}

QuadPoly combine(const IntPoly& A, const IntPoly& B, const Integer& c) {
  const long deg = std::max(A.degree(), B.degree());
  std::vector<QuadRat> out;
  out.reserve(static_cast<std::size_t>(deg + 1));
  for (long i = 0; i <= deg; ++i) out.emplace_back(Rational(A.coeff(i)), Rational(B.coeff(i)), c);
  return QuadPoly(c, std::move(out));
}

QuadPoly build_P(const Integer& c, long k) {
  if (k < 0) throw std::invalid_argument("build_P: k must be nonnegative");
  QuadPoly p = QuadPoly::constant(QuadRat::one(c));
  for (long i = 0; i <= k; ++i) p *= QuadPoly::linear(scalar(-i, 1, c));
  return p;
}

QuadPoly forward_difference(const QuadPoly& p, long order) {
  if (order < 0) throw std::invalid_argument("forward_difference: order must be nonnegative");
  const Integer& c = p.param();

  QuadPoly repeated = p;
  for (long i = 0; i < order && !repeated.is_zero(); ++i)
    repeated = shift(repeated, scalar(1, 0, c)) - repeated;

  // Δⁿ = Σ_m (-1)^{n-m} C(n,m) E_m
  QuadPoly expanded(c);
  for (long m = 0; m <= order; ++m) {
    Integer coef = binomial(order, m);
    if ((order - m) % 2) coef = -coef;
    expanded += shift(p, scalar(m, 0, c)) * scalar(Rational(coef), 0, c);
  }

  if (!(repeated == expanded))
    throw InvariantViolation("forward_difference: repeated and binomial expansions disagree");
  return expanded;
}

QuadPoly newton_basis(const Integer& c, long l) {
  if (l < 0) throw std::invalid_argument("newton_basis: l must be nonnegative");
  QuadPoly p = QuadPoly::constant(QuadRat::one(c));
  for (long i = 0; i < l; ++i) p *= QuadPoly::linear(scalar(-i, -1, c));
  return p;
}

QuadRat falling_factorial(const QuadRat& y, long n) {
  if (n < 0) throw std::invalid_argument("falling_factorial: n must be nonnegative");
  QuadRat acc = QuadRat::one(y.param());
  for (long i = 0; i < n; ++i) acc *= y - scalar(i, 0, y.param());
  return acc;
}

QuadRat reciprocal_P(const Integer& c, long k, const QuadRat& w) {
  QuadRat acc = QuadRat::one(c);
  for (long i = 0; i <= k; ++i) {
    const QuadRat factor = w + scalar(-i, 1, c);
    if (factor.is_zero()) throw PoleError("P_k vanishes at the evaluation point");
    acc *= factor;
  }
  return inverse(acc);
}

QuadRat R_def(const Integer& c, long k, long l, const QuadRat& z) {
  require_theta_range(k, l);
  QuadRat sum = QuadRat::zero(c);
  for (long j = 0; j <= l; ++j) {
    Integer coef = binomial(l, j);
    if ((l - j) % 2) coef = -coef;
    sum += reciprocal_P(c, k, z + scalar(j, 1, c)) * Rational(coef);
  }
  return sum * Rational(1, factorial(l));
}

QuadRat R_closed(const Integer& c, long k, long l, const QuadRat& z) {
  require_theta_range(k, l);
  const QuadRat two_root = scalar(0, 2, c);
  QuadRat denom = z + two_root;
  if (denom.is_zero()) throw PoleError("R_closed: z = -2 sqrt(-c)");
  // (k-2√-c-z)^{\underline k} and (ℓ+2√-c+z)^{\underline ℓ}, factor by factor
  const QuadRat left = scalar(k, 0, c) - two_root - z;
  const QuadRat right = scalar(l, 0, c) + two_root + z;
  for (long i = 0; i < k; ++i) {
    const QuadRat f = left - scalar(i, 0, c);
    if (f.is_zero()) throw PoleError("R_closed: falling factorial factor vanishes");
    denom *= f;
  }
  for (long i = 0; i < l; ++i) {
    const QuadRat f = right - scalar(i, 0, c);
    if (f.is_zero()) throw PoleError("R_closed: falling factorial factor vanishes");
    denom *= f;
  }
  Integer numer = binomial(k + l, l);
  if ((k + l) % 2) numer = -numer;
  return inverse(denom) * Rational(numer);
}

QuadRat theta_def(const Integer& c, long k, long l) { return R_def(c, k, l, QuadRat::zero(c)); }

QuadRat theta_closed(const Integer& c, long k, long l) { return R_closed(c, k, l, QuadRat::zero(c)); }

namespace {

template <class Coefficient>
QuadPoly assemble_newton(const Integer& c, long k, Coefficient&& theta) {
  if (k < 0) throw std::invalid_argument("alpha: k must be nonnegative");
  QuadPoly alpha(c);
  QuadPoly basis = QuadPoly::constant(QuadRat::one(c));
  for (long l = 0; l <= k; ++l) {
    alpha += basis * theta(c, k, l);
    basis *= QuadPoly::linear(scalar(-l, -1, c));
  }
  return alpha;
}

}  // namespace

QuadPoly alpha_closed(const Integer& c, long k) { return assemble_newton(c, k, theta_closed); }

QuadPoly alpha_interp(const Integer& c, long k) { return assemble_newton(c, k, theta_def); }

BezoutPair bezout_general(const QuadPoly& P, const QuadPoly& Q) {
  if (P.param() != Q.param()) throw RingMismatch("polynomials over different fields Q(sqrt(-c))");
  if (P.degree() < 1 || Q.degree() < 1)
    throw std::invalid_argument("bezout_general: both polynomials must be non-constant");
  const Integer& c = P.param();
  const QuadPoly one = QuadPoly::constant(QuadRat::one(c));

  // Invariant: r_i = P·s_i + Q·t_i, each r_i monic.
  QuadRat inv = inverse(P.leading());
  QuadPoly r0 = P * inv, s0 = one * inv, t0(c);
  inv = inverse(Q.leading());
  QuadPoly r1 = Q * inv, s1(c), t1 = one * inv;
  while (!r1.is_zero()) {
    auto [q, r2] = divmod(r0, r1);
    QuadPoly s2 = s0 - q * s1;
    QuadPoly t2 = t0 - q * t1;
    if (!r2.is_zero()) {
      inv = inverse(r2.leading());
      r2 *= inv;
      s2 *= inv;
      t2 *= inv;
    }
    r0 = std::move(r1);
    s0 = std::move(s1);
    t0 = std::move(t1);
    r1 = std::move(r2);
    s1 = std::move(s2);
    t1 = std::move(t2);
  }
  if (r0.degree() >= 1) {
    std::ostringstream msg;
    msg << "bezout_general: common factor of degree " << r0.degree() << ": " << r0;
    throw CommonFactorError(msg.str());
  }
  inv = inverse(r0.leading());
  s0 *= inv;
  t0 *= inv;

  BezoutPair out{divmod(s0, Q).second, divmod(t0, -P).second};
  if (!(P * out.u + Q * out.v == one))
    throw InvariantViolation("bezout_general: reduced cofactors do not satisfy PU + QV = 1");
  return out;
}

Integer certificate_modulus(const Integer& c, long k) {
  if (k < 0) throw std::invalid_argument("certificate_modulus: k must be nonnegative");
  Integer d = c;
  for (long l = 1; l <= k; ++l) d *= Integer(l) * l + 4 * c;
  return d;
}

BezoutCertificate bezout_certificate(const Integer& c, long k) {
  if (c < 1) throw std::invalid_argument("bezout_certificate: c must be >= 1");
  if (k < 0) throw std::invalid_argument("bezout_certificate: k must be nonnegative");
  BezoutCertificate cert;
  cert.c = c;
  cert.k = k;
  cert.alpha = alpha_closed(c, k);
  if (!(cert.alpha == alpha_interp(c, k)))
    throw InvariantViolation("alpha_k: closed form and interpolation disagree");
  std::tie(cert.A, cert.B) = split_AB(build_P(c, k));
  cert.d = certificate_modulus(c, k);
  try {
    std::tie(cert.r, cert.s) = split_AB(cert.alpha * scalar(Rational(2 * cert.d), 0, c));
  } catch (const NotExactDivision&) {
    throw InvariantViolation("2d*alpha_k has coefficients outside Z[sqrt(-c)]");
  }
  verify_certificate(cert);
  return cert;
}

void verify_certificate(const BezoutCertificate& cert) {
  const Integer& c = cert.c;
  auto fail = [&](const std::string& what) {
    throw InvariantViolation("certificate (c=" + c.get_str() + ", k=" + std::to_string(cert.k) + "): " + what);
  };
  if (cert.alpha.param() != c) fail("alpha has the wrong ring parameter");
  if (cert.alpha.degree() > cert.k) fail("deg alpha exceeds k");
  const QuadPoly P = build_P(c, cert.k);
  if (!(combine(cert.A, cert.B, c) == P)) fail("A + B sqrt(-c) != P_k");
  if (!(cert.alpha * P + conj(cert.alpha) * conj(P) == QuadPoly::constant(QuadRat::one(c))))
    fail("alpha P + conj(alpha) conj(P) != 1");
  if (cert.d != certificate_modulus(c, cert.k)) fail("d != c prod(l^2 + 4c)");
  if (!(combine(cert.r, cert.s, c) == cert.alpha * scalar(Rational(2 * cert.d), 0, c)))
    fail("r + s sqrt(-c) != 2d alpha");
  if (!(cert.r * cert.A - (cert.s * cert.B) * c == IntPoly({cert.d}))) fail("r A - c s B != d");
}

}  // namespace lcmq
