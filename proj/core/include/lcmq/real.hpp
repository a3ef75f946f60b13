#pragma once

// Fixed-precision reals for the logarithmic side of the bound checks.
// 50 decimal digits (about 166 bits) of MPFR precision.

#include <boost/multiprecision/mpfr.hpp>

#include <string>

#include "lcmq/ring.hpp"

namespace lcmq {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<50>,
                                           boost::multiprecision::et_off>;

Real to_real(const Integer& z);
Real to_real(const Rational& q);
Real log_of(const Integer& z);
Real pi();

/// Decimal with 15 significant digits; the text form used in every report.
std::string format_real(const Real& x);

}  // namespace lcmq
