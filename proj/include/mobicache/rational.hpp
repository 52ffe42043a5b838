// Exact arithmetic used across the rate calculators: arbitrary-precision
// integers and rationals, binomial coefficients, and the handful of
// parse/format helpers the CLI shares with the tests.
#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace mobicache {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(n, k); zero when k < 0 or k > n.
inline BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  BigInt out = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    out *= (n - k + i);
    out /= i;  // exact at every step: product of i consecutive integers
  }
  return out;
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline BigInt floor_rational(const Rational& r) {
  BigInt q = numerator(r) / denominator(r);
  if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
  return q;
}

inline BigInt ceil_rational(const Rational& r) {
  BigInt f = floor_rational(r);
  return f * denominator(r) == numerator(r) ? f : f + 1;
}

// "3", "1/8", "0.25" -> exact rational.
inline Rational parse_rational(const std::string& text) {
  auto bad = [&] { throw std::invalid_argument("not a rational: '" + text + "'"); };
  if (text.empty()) bad();
  auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      BigInt num(text.substr(0, slash));
      BigInt den(text.substr(slash + 1));
      if (den == 0) bad();
      return Rational(num, den);
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(BigInt(text));
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    BigInt den = 1;
    for (size_t i = dot + 1; i < text.size(); ++i) den *= 10;
    if (digits.empty() || digits == "-") bad();
    return Rational(BigInt(digits), den);
  } catch (const std::runtime_error&) {
    bad();
  }
  return 0;  // unreachable
}

inline double to_double(const Rational& r) {
  return static_cast<double>(boost::multiprecision::cpp_bin_float_100(numerator(r)) /
                             boost::multiprecision::cpp_bin_float_100(denominator(r)));
}

inline std::string rational_string(const Rational& r) {
  if (is_integer(r)) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

// Fixed number of significant digits, plain or scientific as %g decides.
inline std::string sig_digits(double v, int digits = 3) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  return buf;
}

inline std::string sig_digits(const Rational& r, int digits = 3) {
  return sig_digits(to_double(r), digits);
}

inline std::string sig_digits(const BigInt& n, int digits = 3) {
  return sig_digits(static_cast<double>(boost::multiprecision::cpp_bin_float_100(n)), digits);
}

// Exact double -> rational conversion (every finite double is dyadic).
inline Rational rational_from_double(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("non-finite value");
  if (v == 0.0) return 0;
  int exp = 0;
  double mant = std::frexp(v, &exp);  // v = mant * 2^exp, |mant| in [0.5, 1)
  auto scaled = static_cast<std::int64_t>(std::ldexp(mant, 53));
  exp -= 53;
  Rational r(scaled);
  if (exp > 0)
    r *= Rational(BigInt(1) << exp);
  else if (exp < 0)
    r /= Rational(BigInt(1) << -exp);
  return r;
}

}  // namespace mobicache
