#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ccr {

// Exact coefficient ring: arbitrary-precision rationals, always normalized
// to lowest terms with positive denominator.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace ccr
