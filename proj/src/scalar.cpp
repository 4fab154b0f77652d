#include "qlie/scalar.hpp"

#include <cctype>

namespace qlie {

const char* errc_name(errc c) {
  switch (c) {
    case errc::parse_error: return "ParseError";
    case errc::index_error: return "IndexError";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::inconsistent_system: return "Inconsistent";
    case errc::singular_map: return "SingularMap";
    case errc::invalid_algebra: return "InvalidAlgebra";
    case errc::not_solvable: return "NotSolvable";
    case errc::unsupported_dimension: return "UnsupportedDimension";
    case errc::not_isotropic: return "NotIsotropic";
    case errc::degenerate_form: return "DegenerateForm";
    case errc::no_square_root: return "NoSquareRoot";
    case errc::not_skew_derivation: return "NotSkewDerivation";
    case errc::not_skew: return "NotSkew";
    case errc::not_inner: return "NotInner";
    case errc::not_lie_algebra: return "NotLieAlgebra";
    case errc::no_frame: return "NoFrame";
    case errc::kernel_not_in_image: return "KernelNotInImage";
    case errc::unexpected_orbit: return "UnexpectedOrbit";
    case errc::bad_parameter: return "BadParameter";
    case errc::resample_exhausted: return "ResampleExhausted";
  }
  return "UnknownError";
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(errc::division_by_zero, "inverse of zero scalar");
  Rational n = norm();
  return Scalar(static_cast<Rational>(re / n), static_cast<Rational>(-im / n));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  Rational r = static_cast<Rational>(re * o.re - im * o.im);
  Rational i = static_cast<Rational>(re * o.im + im * o.re);
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) fail(errc::division_by_zero, "scalar division by zero");
  return *this *= o.inverse();
}

bool scalar_less(const Scalar& a, const Scalar& b) {
  if (a.re != b.re) return a.re < b.re;
  return a.im < b.im;
}

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  BigInt num = numerator(r), den = denominator(r);
  BigInt sn = sqrt(num), sd = sqrt(den);
  if (sn * sn != num || sd * sd != den) return std::nullopt;
  return Rational(sn, sd);
}

std::optional<Scalar> sqrt_exact(const Scalar& s) {
  // (a+bi)^2 = x+yi forces (a^2+b^2)^2 = x^2+y^2, so the norm must be a
  // rational square; then a^2 = (m+x)/2 and b^2 = (m-x)/2 with m = sqrt(norm).
  if (s.is_zero()) return Scalar(0);
  auto m = rational_sqrt(s.norm());
  if (!m) return std::nullopt;
  auto a2 = static_cast<Rational>((*m + s.re) / 2);
  auto b2 = static_cast<Rational>((*m - s.re) / 2);
  auto a = rational_sqrt(a2);
  if (!a) return std::nullopt;
  auto b = rational_sqrt(b2);
  if (!b) return std::nullopt;
  // fix the relative sign from 2ab = im, then pick the canonical root
  Scalar root(*a, s.im >= 0 ? *b : static_cast<Rational>(-*b));
  if (root * root != s) return std::nullopt;
  if (root.re < 0 || (root.re == 0 && root.im < 0)) root = -root;
  return root;
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  [[noreturn]] void die(const std::string& what) const {
    fail(errc::parse_error,
         "scalar \"" + std::string(text) + "\": " + what + " at offset " + std::to_string(pos));
  }

  BigInt digits() {
    if (done() || !std::isdigit(static_cast<unsigned char>(peek()))) die("expected digits");
    BigInt v = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (text[pos] - '0');
      ++pos;
    }
    return v;
  }

  // digits ['/' digits], no sign
  Rational magnitude() {
    BigInt num = digits();
    if (!done() && peek() == '/') {
      ++pos;
      BigInt den = digits();
      if (den == 0) die("zero denominator");
      return Rational(num, den);
    }
    return Rational(num);
  }
};

} // namespace

Scalar parse_scalar(std::string_view text) {
  Cursor c{text};
  if (c.done()) c.die("empty input");

  bool neg = false;
  if (c.peek() == '-') {
    neg = true;
    ++c.pos;
  }

  // ['-'] [magnitude] 'i' : pure imaginary with optional magnitude
  if (!c.done() && c.peek() == 'i') {
    ++c.pos;
    if (!c.done()) c.die("trailing input");
    return Scalar(Rational(0), Rational(neg ? -1 : 1));
  }

  Rational first = c.magnitude();
  if (neg) first = -first;

  if (c.done()) return Scalar(first);

  if (c.peek() == 'i') {
    ++c.pos;
    if (!c.done()) c.die("trailing input");
    return Scalar(Rational(0), first);
  }

  char sep = c.peek();
  if (sep != '+' && sep != '-') c.die("expected '+', '-' or 'i'");
  ++c.pos;

  Rational mag(1);
  if (!c.done() && c.peek() != 'i') mag = c.magnitude();
  if (c.done() || c.peek() != 'i') c.die("expected 'i'");
  ++c.pos;
  if (!c.done()) c.die("trailing input");

  return Scalar(first, sep == '-' ? static_cast<Rational>(-mag) : mag);
}

std::string to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

std::string to_string(const Scalar& s) {
  if (s.is_zero()) return "0";
  if (s.im == 0) return to_string(s.re);

  std::string imag;
  Rational mag = s.im < 0 ? static_cast<Rational>(-s.im) : s.im;
  if (mag != 1) imag = to_string(mag);
  imag += "i";

  if (s.re == 0) return (s.im < 0 ? "-" : "") + imag;
  return to_string(s.re) + (s.im < 0 ? "-" : "+") + imag;
}

} // namespace qlie
