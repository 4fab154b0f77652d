#pragma once

#include <cstddef>
#include <vector>

#include "qlie/polynomial.hpp"
#include "qlie/scalar.hpp"

namespace qlie {

using Vec = std::vector<Scalar>;

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scaled(const Vec& a, const Scalar& k);
bool vec_is_zero(const Vec& a);
Vec basis_unit(std::size_t n, std::size_t k);

class Matrix;

/// A linear map stored as a matrix acting on coordinate columns
/// (columns are images of basis vectors).
using LinearMap = Matrix;

/// Dense row-major matrix over Q(i).
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  void set_row(std::size_t i, const Vec& v);

  Matrix transpose() const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  /// Matrix-vector product m*v.
  Vec apply(const Vec& v) const;

  Matrix scaled(const Scalar& k) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

/// Reduced row echelon form. Pivoting is deterministic: for each column the
/// first remaining row with a nonzero entry is chosen.
Matrix rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Rows form an RREF basis of { v : m v = 0 }. Zero nullspace gives a 0 x cols matrix.
Matrix kernel_basis(const Matrix& m);

/// One exact solution of m x = b with free variables set to zero.
/// Throws errc::inconsistent_system when none exists.
Vec solve(const Matrix& m, const Vec& b);

/// Solve m X = rhs column by column; throws errc::inconsistent_system.
Matrix solve_matrix(const Matrix& m, const Matrix& rhs);

Matrix inverse(const Matrix& m); // throws errc::singular_map

Scalar determinant(const Matrix& m);

/// Monic characteristic polynomial det(tI - m) by the Faddeev-LeVerrier
/// recurrence; exact over Q(i).
Polynomial char_poly(const Matrix& m);

/// p(m) with p acting by matrix powers.
Matrix poly_eval(const Polynomial& p, const Matrix& m);

} // namespace qlie
