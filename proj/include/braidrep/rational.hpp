#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <string>

namespace braidrep {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_zero(const Rational& r) { return r.is_zero(); }

inline Rational inv(const Rational& r) { return Rational(1) / r; }

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }

inline std::string rational_str(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline bool is_zero(const std::complex<double>& z) { return z == std::complex<double>(0.0); }

}  // namespace braidrep
