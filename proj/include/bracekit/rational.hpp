#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace bracekit {

/// Exact rational in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational make_rational(std::int64_t num, std::int64_t den) { return Rational(num, den); }

inline std::string numerator_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str();
}

inline std::string denominator_string(const Rational& r) {
  return boost::multiprecision::denominator(r).str();
}

/// Always "num/den", including integers ("1/1").
inline std::string to_string(const Rational& r) {
  return numerator_string(r) + "/" + denominator_string(r);
}

}  // namespace bracekit
