#include "qlie/polynomial.hpp"

namespace qlie {

void Polynomial::strip() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar Polynomial::leading() const {
  if (is_zero()) fail(errc::bad_parameter, "leading coefficient of the zero polynomial");
  return c_.back();
}

Scalar Polynomial::evaluate(const Scalar& x) const {
  Scalar acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial();
  std::vector<Scalar> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Scalar(static_cast<int>(k));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().inverse());
}

Polynomial Polynomial::operator-() const {
  std::vector<Scalar> r(c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) r[k] = -c_[k];
  return Polynomial(std::move(r));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Scalar> r(std::max(a.c_.size(), b.c_.size()), Scalar(0));
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = a.coeff(k) + b.coeff(k);
  return Polynomial(std::move(r));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1, Scalar(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(r));
}

Polynomial Polynomial::scaled(const Scalar& k) const {
  std::vector<Scalar> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * k;
  return Polynomial(std::move(r));
}

PolyDivision poly_divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) fail(errc::division_by_zero, "polynomial division by zero");
  std::vector<Scalar> rem(a.coeffs());
  std::vector<Scalar> quot;
  int db = b.degree();
  if (a.degree() >= db) quot.assign(a.degree() - db + 1, Scalar(0));
  Scalar lead_inv = b.leading().inverse();
  for (int k = a.degree(); k >= db; --k) {
    Scalar q = rem[k] * lead_inv;
    if (!q.is_zero()) {
      quot[k - db] = q;
      for (int j = 0; j <= db; ++j) rem[k - db + j] -= q * b.coeff(j);
    }
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = poly_divmod(x, y).remainder;
    x = y;
    y = r;
  }
  return x.monic();
}

bool is_squarefree(const Polynomial& p) {
  if (p.is_zero()) fail(errc::bad_parameter, "squarefree test on the zero polynomial");
  return poly_gcd(p, p.derivative()).is_constant();
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    Scalar c = p.coeff(static_cast<std::size_t>(k));
    if (c.is_zero()) continue;
    std::string term = to_string(c);
    bool negated = false;
    if (term.front() == '-' && c.im == 0) {
      term.erase(term.begin());
      negated = true;
    }
    if (k > 0) {
      if (term == "1")
        term.clear();
      else if (c.im != 0 || term.find('/') != std::string::npos)
        term = "(" + term + ")";
      term += "t";
      if (k > 1) term += "^" + std::to_string(k);
    }
    if (out.empty())
      out = (negated ? "-" : "") + term;
    else
      out += (negated ? "-" : "+") + term;
  }
  return out;
}

} // namespace qlie
