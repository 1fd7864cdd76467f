#ifndef MOPKIT_SCALAR_HPP
#define MOPKIT_SCALAR_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <concepts>
#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace mopkit {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Complex = std::complex<double>;

// The two scalar fields everything is instantiated over.
template <typename S>
concept Field = std::same_as<S, Rational> || std::same_as<S, Complex>;

inline constexpr double kDefaultTolerance = 1e-10;

template <Field S>
inline constexpr bool is_exact_v = std::same_as<S, Rational>;

inline bool is_zero(const Rational& a, double /*tol*/ = kDefaultTolerance) { return a == 0; }
inline bool is_zero(const Complex& a, double tol = kDefaultTolerance) { return std::abs(a) <= tol; }

// Exact equality for rationals; |a-b| <= tol * max(1, |a|, |b|) for complex floats.
inline bool near(const Rational& a, const Rational& b, double /*tol*/ = kDefaultTolerance) {
  return a == b;
}
inline bool near(const Complex& a, const Complex& b, double tol = kDefaultTolerance) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

inline double magnitude(const Rational& a) { return std::abs(a.convert_to<double>()); }
inline double magnitude(const Complex& a) { return std::abs(a); }

// Relative error with unit floor, the quantity `near` compares against tol.
inline double relative_error(const Complex& a, const Complex& b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

template <Field S>
S embed(const Rational& r) {
  if constexpr (is_exact_v<S>) {
    return r;
  } else {
    return Complex(r.convert_to<double>(), 0.0);
  }
}

inline Complex to_complex(const Rational& r) { return Complex(r.convert_to<double>(), 0.0); }
inline Complex to_complex(const Complex& c) { return c; }

// "a/b" or an integer literal, optional sign. Throws ParseError.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& r);
// 17 significant digits; imaginary part only when nonzero.
std::string to_string(const Complex& c);

template <Field S>
S power(const S& base, int exponent) {
  S result(1);
  S b = base;
  unsigned e = static_cast<unsigned>(exponent);
  while (e != 0) {
    if (e & 1U) result *= b;
    b *= b;
    e >>= 1U;
  }
  return result;
}

inline Rational factorial(int n) {
  Rational f(1);
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace mopkit

#endif  // MOPKIT_SCALAR_HPP
