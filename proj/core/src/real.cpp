#include "lcmq/real.hpp"

#include <array>
#include <stdexcept>

namespace lcmq {

Real to_real(const Integer& z) {
  Real r;
  mpfr_set_z(r.backend().data(), z.get_mpz_t(), MPFR_RNDN);
  return r;
}

Real to_real(const Rational& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

Real log_of(const Integer& z) {
  if (z <= 0) throw std::domain_error("log_of: argument must be positive");
  return log(to_real(z));
}

Real pi() {
  Real r;
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

std::string format_real(const Real& x) {
  std::array<char, 64> buf{};
  const int len = mpfr_snprintf(buf.data(), buf.size(), "%.15Rg", x.backend().data());
  if (len < 0 || static_cast<std::size_t>(len) >= buf.size())
    throw std::runtime_error("format_real: formatting failed");
  return std::string(buf.data(), static_cast<std::size_t>(len));
}

}  // namespace lcmq
