#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <stdexcept>
#include <string>

namespace mindeg {

using BigInt = boost::multiprecision::cpp_int;

// Exact reduced fraction with positive denominator. The backend keeps the
// canonical form at all times, so operator== is structural equality.
using Rational = boost::multiprecision::cpp_rational;

// Probability mass per stopping time k. Masses are exact; absent keys mean
// zero mass.
using KDistribution = std::map<long long, Rational>;

// Builds num/den accepting any sign of denominator (the backend constructor
// does not).
inline Rational make_rational(BigInt num, BigInt den) {
  if (den == 0) {
    throw std::invalid_argument("rational: zero denominator");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

inline Rational make_rational(BigInt num) { return Rational(std::move(num)); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// "num/den", or just "num" for integers.
inline std::string to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += "/" + denominator(r).str();
  }
  return s;
}

inline BigInt factorial(long long n) {
  if (n < 0) {
    throw std::invalid_argument("factorial: negative argument");
  }
  BigInt result = 1;
  for (long long i = 2; i <= n; ++i) {
    result *= i;
  }
  return result;
}

}  // namespace mindeg
