#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

#include "qlie/error.hpp"

namespace qlie {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Gaussian rational re + im*i, the element type of every exact computation
/// in this library. Both parts are kept in canonical reduced form (positive
/// denominator) by the backing rational type, so operator== is structural.
struct Scalar {
  Rational re;
  Rational im;

  Scalar() = default;
  Scalar(int v) : re(v) {}
  Scalar(Rational r) : re(std::move(r)) {}
  Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static Scalar i() { return Scalar(Rational(0), Rational(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  Scalar conj() const { return Scalar(re, -im); }

  /// re^2 + im^2, the multiplicative norm down to Q.
  Rational norm() const { return static_cast<Rational>(re * re + im * im); }

  Scalar inverse() const;

  Scalar operator-() const { return Scalar(static_cast<Rational>(-re), static_cast<Rational>(-im)); }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
};

/// Total order by (re, im); has no algebraic meaning, only used to make
/// canonical choices deterministic.
bool scalar_less(const Scalar& a, const Scalar& b);

/// Exact square root of a non-negative rational, if it is a perfect square.
std::optional<Rational> rational_sqrt(const Rational& r);

/// Exact square root in Q(i). The returned root is the canonical one:
/// positive real part, or zero real part and non-negative imaginary part.
std::optional<Scalar> sqrt_exact(const Scalar& s);

/// Parse the scalar grammar:
///   rational := ['-'] digits ['/' digits]
///   scalar   := rational | rational ('+'|'-') [digits ['/' digits]] 'i' | ['-'] [digits ['/' digits]] 'i'
/// An omitted magnitude before 'i' means 1. Throws errc::parse_error.
Scalar parse_scalar(std::string_view text);

std::string to_string(const Rational& r);

/// Canonical emission: real part first, imaginary sign folded into the
/// separator, unit imaginary written as bare "i", zero imaginary omitted,
/// zero scalar written "0".
std::string to_string(const Scalar& s);

} // namespace qlie
