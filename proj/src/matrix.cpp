#include "qlie/matrix.hpp"

namespace qlie {

Vec vec_add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] + b[k];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] - b[k];
  return r;
}

Vec vec_scaled(const Vec& a, const Scalar& k) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * k;
  return r;
}

bool vec_is_zero(const Vec& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

Vec basis_unit(std::size_t n, std::size_t k) {
  Vec e(n, Scalar(0));
  e[k] = Scalar(1);
  return e;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return Matrix();
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) fail(errc::dimension_mismatch, "ragged row lengths");
    m.set_row(i, rows[i]);
  }
  return m;
}

Vec Matrix::row(std::size_t i) const {
  return Vec(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
             a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vec Matrix::col(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

void Matrix::set_row(std::size_t i, const Vec& v) {
  for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) fail(errc::dimension_mismatch, "matrix-vector size mismatch");
  Vec r(rows_, Scalar(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
  return r;
}

Matrix Matrix::scaled(const Scalar& k) const {
  Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * k;
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) fail(errc::dimension_mismatch, "matrix product shape mismatch");
  Matrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, j) += aik * b.at(k, j);
    }
  return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(errc::dimension_mismatch, "matrix sum shape mismatch");
  Matrix r(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] + b.a_[i];
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(errc::dimension_mismatch, "matrix difference shape mismatch");
  Matrix r(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] - b.a_[i];
  return r;
}

namespace {

// Gauss-Jordan elimination in place; returns the pivot columns.
std::vector<std::size_t> eliminate(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m.at(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
    Scalar inv = m.at(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Scalar f = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

} // namespace

Matrix rref(const Matrix& m) {
  Matrix r = m;
  eliminate(r);
  return r;
}

std::size_t rank(const Matrix& m) {
  Matrix r = m;
  return eliminate(r).size();
}

Matrix kernel_basis(const Matrix& m) {
  Matrix r = m;
  auto pivots = eliminate(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<Vec> rows;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols(), Scalar(0));
    v[f] = Scalar(1);
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r.at(k, f);
    rows.push_back(std::move(v));
  }
  if (rows.empty()) return Matrix(0, m.cols());
  Matrix basis = Matrix::from_rows(rows);
  return rref(basis);
}

namespace {

// Shared worker: RREF of [m | rhs] and back-substitution with free
// variables zeroed.
Matrix solve_impl(const Matrix& m, const Matrix& rhs) {
  if (m.rows() != rhs.rows()) fail(errc::dimension_mismatch, "solve shape mismatch");
  Matrix aug(m.rows(), m.cols() + rhs.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    for (std::size_t j = 0; j < rhs.cols(); ++j) aug.at(i, m.cols() + j) = rhs.at(i, j);
  }
  auto pivots = eliminate(aug);
  for (auto c : pivots)
    if (c >= m.cols()) fail(errc::inconsistent_system, "linear system has no solution");

  Matrix x(m.cols(), rhs.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k)
    for (std::size_t j = 0; j < rhs.cols(); ++j) x.at(pivots[k], j) = aug.at(k, m.cols() + j);
  return x;
}

} // namespace

Vec solve(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) fail(errc::dimension_mismatch, "solve rhs length mismatch");
  Matrix rhs(b.size(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) rhs.at(i, 0) = b[i];
  return solve_impl(m, rhs).col(0);
}

Matrix solve_matrix(const Matrix& m, const Matrix& rhs) { return solve_impl(m, rhs); }

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) fail(errc::dimension_mismatch, "inverse of non-square matrix");
  if (rank(m) != m.rows()) fail(errc::singular_map, "matrix is singular");
  return solve_impl(m, Matrix::identity(m.rows()));
}

Scalar determinant(const Matrix& m) {
  if (!m.is_square()) fail(errc::dimension_mismatch, "determinant of non-square matrix");
  Matrix w = m;
  Scalar det(1);
  std::size_t n = w.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && w.at(p, c).is_zero()) ++p;
    if (p == n) return Scalar(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(w.at(p, j), w.at(c, j));
      det = -det;
    }
    det *= w.at(c, c);
    Scalar inv = w.at(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (w.at(i, c).is_zero()) continue;
      Scalar f = w.at(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) w.at(i, j) -= f * w.at(c, j);
    }
  }
  return det;
}

Polynomial char_poly(const Matrix& m) {
  if (!m.is_square()) fail(errc::dimension_mismatch, "characteristic polynomial of non-square matrix");
  std::size_t n = m.rows();
  // Faddeev-LeVerrier: M_1 = A, c_{n-1} = -tr M_1, M_{k+1} = A (M_k + c_{n-k} I).
  std::vector<Scalar> coeff(n + 1, Scalar(0));
  coeff[n] = Scalar(1);
  Matrix mk(n, n);
  Matrix acc = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * acc;
    Scalar tr(0);
    for (std::size_t i = 0; i < n; ++i) tr += mk.at(i, i);
    Scalar ck = -(tr / Scalar(static_cast<int>(k)));
    coeff[n - k] = ck;
    acc = mk;
    for (std::size_t i = 0; i < n; ++i) acc.at(i, i) += ck;
  }
  return Polynomial(std::move(coeff));
}

Matrix poly_eval(const Polynomial& p, const Matrix& m) {
  if (!m.is_square()) fail(errc::dimension_mismatch, "polynomial of non-square matrix");
  Matrix acc(m.rows(), m.cols());
  for (int k = p.degree(); k >= 0; --k) {
    acc = acc * m;
    Scalar c = p.coeff(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < m.rows(); ++i) acc.at(i, i) += c;
  }
  return acc;
}

} // namespace qlie
