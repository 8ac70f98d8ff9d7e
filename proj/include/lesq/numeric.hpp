#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace lesq {

// Coefficients (LR, Kostka, generalized LR) never overflow silently.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& v) { return v.str(); }

// "p/q" or "p" when the denominator is one.
std::string to_string(const Rational& q);

// Least common multiple of the denominators; 1 for an empty range.
template <class Range>
BigInt denominator_lcm(const Range& values) {
  BigInt l = 1;
  for (const Rational& q : values) {
    BigInt d = boost::multiprecision::denominator(q);
    l = l / boost::multiprecision::gcd(l, d) * d;
  }
  return l;
}

}  // namespace lesq
