#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace dhall {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// p^e for any integer exponent.
inline Rational power(std::uint32_t p, long e) {
  BigInt base = 1;
  for (long i = 0; i < (e < 0 ? -e : e); ++i) base *= p;
  if (e >= 0) return Rational(base);
  return Rational(BigInt(1), base);
}

inline BigInt ipower(std::uint32_t p, std::size_t e) {
  BigInt r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= p;
  return r;
}

// Reduced "a/b" with b >= 1.
inline std::string to_fraction_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

Rational parse_fraction(const std::string& text);

}  // namespace dhall
