#pragma once

// Extended-precision reals used for theta and every bound comparison.

#include <string>

#include <boost/multiprecision/mpfr.hpp>

namespace levelone {

/// 50 significant decimal digits (168-bit mantissa).
using Real = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<50, boost::multiprecision::allocate_stack>,
    boost::multiprecision::et_off>;

/// Twice the digits; comparisons that land within kNearZero of equality are redone here.
using WideReal = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<100, boost::multiprecision::allocate_stack>,
    boost::multiprecision::et_off>;

inline constexpr int kRealBits = std::numeric_limits<Real>::digits;
inline constexpr int kWideRealBits = std::numeric_limits<WideReal>::digits;

/// Margin below which a sign decision at Real precision is not trusted.
inline const Real& near_zero() {
  static const Real eps = boost::multiprecision::ldexp(Real(1), -(kRealBits - 24));
  return eps;
}

/// Fixed-point decimal with `digits` fractional digits, trailing zeros
/// trimmed but at least one kept ("1.0", "0.69314...").  Locale independent.
std::string format_decimal(const Real& x, int digits = 20);

}  // namespace levelone
