#pragma once

#include <vector>

#include "qlie/scalar.hpp"

namespace qlie {

/// Dense univariate polynomial over Q(i), coefficients lowest degree first,
/// trailing zeros stripped. The zero polynomial has no coefficients and
/// degree -1.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { strip(); }
  static Polynomial constant(const Scalar& v) { return Polynomial({v}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_constant() const { return c_.size() <= 1; }

  const std::vector<Scalar>& coeffs() const { return c_; }
  /// Coefficient of t^k, zero beyond the stored degree.
  Scalar coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Scalar(0); }
  Scalar leading() const;

  Scalar evaluate(const Scalar& x) const;
  Polynomial derivative() const;
  Polynomial monic() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const Scalar& k) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
  void strip();
  std::vector<Scalar> c_;
};

struct PolyDivision {
  Polynomial quotient;
  Polynomial remainder;
};

/// Euclidean division by a nonzero divisor.
PolyDivision poly_divmod(const Polynomial& a, const Polynomial& b);

/// Monic gcd via the Euclidean algorithm; gcd(0, 0) = 0.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

/// True iff gcd(p, p') is constant. Requires p nonzero.
bool is_squarefree(const Polynomial& p);

/// Debug/diagnostic rendering, e.g. "t^4-5t^2+4".
std::string to_string(const Polynomial& p);

} // namespace qlie
