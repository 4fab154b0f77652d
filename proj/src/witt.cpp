#include "qlie/witt.hpp"

namespace qlie {

namespace {

void require_symmetric(const Matrix& gram) {
  if (!gram.is_square()) fail(errc::dimension_mismatch, "gram matrix must be square");
  for (std::size_t i = 0; i < gram.rows(); ++i)
    for (std::size_t j = i + 1; j < gram.cols(); ++j)
      if (gram.at(i, j) != gram.at(j, i)) fail(errc::bad_parameter, "gram matrix not symmetric");
}

Scalar pair(const Matrix& gram, const Vec& x, const Vec& y) {
  Scalar r(0);
  for (std::size_t i = 0; i < gram.rows(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < gram.cols(); ++j)
      if (!gram.at(i, j).is_zero() && !y[j].is_zero()) r += x[i] * gram.at(i, j) * y[j];
  }
  return r;
}

} // namespace

WittDecomposition witt_extend(const Matrix& gram, const Subspace& u) {
  require_symmetric(gram);
  if (determinant(gram).is_zero()) fail(errc::degenerate_form, "witt_extend needs a non-degenerate form");
  if (u.ambient_dim() != gram.rows()) fail(errc::dimension_mismatch, "subspace ambient mismatch");

  std::size_t k = u.dim();
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a; b < k; ++b)
      if (!pair(gram, u.basis_vector(a), u.basis_vector(b)).is_zero())
        fail(errc::not_isotropic, "subspace is not totally isotropic");

  // dual solve: (U G) Y = I, one column per partner
  Matrix ug = u.basis() * gram;
  Matrix y = solve_matrix(ug, Matrix::identity(k));

  // isotropic correction w_j = y_j - 1/2 sum_m B(y_j, y_m) u_m
  Matrix w(k, gram.cols());
  Scalar half = Scalar(1) / Scalar(2);
  for (std::size_t j = 0; j < k; ++j) {
    Vec wj = y.col(j);
    for (std::size_t m = 0; m < k; ++m) {
      Scalar c = pair(gram, y.col(j), y.col(m)) * half;
      if (!c.is_zero()) wj = vec_sub(wj, vec_scaled(u.basis_vector(m), c));
    }
    w.set_row(j, wj);
  }

  Matrix stacked(2 * k, gram.cols());
  for (std::size_t i = 0; i < k; ++i) {
    stacked.set_row(i, u.basis_vector(i));
    stacked.set_row(k + i, w.row(i));
  }
  Subspace f = Subspace::row_space(kernel_basis(stacked * gram));

  Matrix pairing = u.basis() * gram * w.transpose();
  return WittDecomposition{u.basis(), std::move(w), std::move(f), std::move(pairing)};
}

Vec isotropic_vector(const Matrix& gram) {
  require_symmetric(gram);
  std::size_t n = gram.rows();
  if (n < 2) fail(errc::bad_parameter, "isotropic_vector needs dimension >= 2");
  if (determinant(gram).is_zero())
    fail(errc::degenerate_form, "isotropic_vector needs a non-degenerate form");

  for (std::size_t i = 0; i < n; ++i)
    if (gram.at(i, i).is_zero()) return basis_unit(n, i);

  // all coordinate vectors anisotropic: orthogonalize the second against the
  // first, then combine
  Vec v1 = basis_unit(n, 0);
  Vec v2 = vec_sub(basis_unit(n, 1), vec_scaled(v1, gram.at(0, 1) / gram.at(0, 0)));
  Scalar q2 = pair(gram, v2, v2);
  if (q2.is_zero()) return v2;

  Scalar ratio = -(gram.at(0, 0) / q2);
  auto s = sqrt_exact(ratio);
  if (!s) fail(errc::no_square_root, "-B(e1,e1)/B(e2,e2) is not a square in Q(i)");
  return vec_add(v1, vec_scaled(v2, *s));
}

Matrix canonical_gram_blocks(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t p = 0; p + 1 < n; p += 2) {
    m.at(p, p + 1) = Scalar(1);
    m.at(p + 1, p) = Scalar(1);
  }
  if (n % 2 == 1) m.at(n - 1, n - 1) = Scalar(1);
  return m;
}

LinearMap canonical_gram_basis(const Matrix& gram) {
  require_symmetric(gram);
  if (determinant(gram).is_zero())
    fail(errc::degenerate_form, "canonical basis needs a non-degenerate form");

  std::size_t n = gram.rows();
  std::vector<Vec> pair_cols; // hyperbolic pairs, in order
  std::vector<Vec> unit_cols; // at most one

  Matrix rest = Matrix::identity(n); // rows span the remaining subspace
  while (rest.rows() > 0) {
    Matrix sub = rest * gram * rest.transpose();
    if (rest.rows() == 1) {
      Scalar d = sub.at(0, 0);
      auto s = sqrt_exact(d.inverse());
      if (!s) fail(errc::no_square_root, "unit normalization impossible over Q(i)");
      unit_cols.push_back(vec_scaled(rest.row(0), *s));
      break;
    }
    Vec x = isotropic_vector(sub);
    // dual partner: solve (x^T sub) y = 1, then kill the self-pairing
    Vec y = solve(Matrix::from_rows({x}) * sub, Vec{Scalar(1)});
    Vec w = vec_sub(y, vec_scaled(x, pair(sub, y, y) / Scalar(2)));

    Vec u_amb(n, Scalar(0)), w_amb(n, Scalar(0));
    for (std::size_t a = 0; a < rest.rows(); ++a) {
      u_amb = vec_add(u_amb, vec_scaled(rest.row(a), x[a]));
      w_amb = vec_add(w_amb, vec_scaled(rest.row(a), w[a]));
    }
    pair_cols.push_back(u_amb);
    pair_cols.push_back(w_amb);

    Matrix constraints = Matrix::from_rows({x, w}) * sub;
    rest = kernel_basis(constraints) * rest;
  }

  Matrix a(n, n);
  std::size_t c = 0;
  for (const auto& v : pair_cols) {
    for (std::size_t i = 0; i < n; ++i) a.at(i, c) = v[i];
    ++c;
  }
  for (const auto& v : unit_cols) {
    for (std::size_t i = 0; i < n; ++i) a.at(i, c) = v[i];
    ++c;
  }
  return a;
}

std::vector<Vec> orthogonal_basis(const Matrix& gram) {
  require_symmetric(gram);
  std::size_t n = gram.rows();
  std::vector<Vec> work;
  for (std::size_t i = 0; i < n; ++i) work.push_back(basis_unit(n, i));
  std::vector<Vec> out;

  while (!work.empty()) {
    std::size_t pick = work.size();
    for (std::size_t a = 0; a < work.size(); ++a)
      if (!pair(gram, work[a], work[a]).is_zero()) {
        pick = a;
        break;
      }
    if (pick == work.size()) {
      // every remaining vector is isotropic; a nonzero cross pairing can be
      // folded onto the diagonal, otherwise the rest is the radical
      bool fixed = false;
      for (std::size_t a = 0; a < work.size() && !fixed; ++a)
        for (std::size_t b = a + 1; b < work.size(); ++b)
          if (!pair(gram, work[a], work[b]).is_zero()) {
            work[a] = vec_add(work[a], work[b]);
            fixed = true;
            break;
          }
      if (!fixed) {
        for (auto& v : work) out.push_back(std::move(v));
        break;
      }
      continue;
    }
    Vec v = work[pick];
    work.erase(work.begin() + static_cast<std::ptrdiff_t>(pick));
    Scalar d = pair(gram, v, v);
    for (auto& u : work) {
      Scalar c = pair(gram, u, v) / d;
      if (!c.is_zero()) u = vec_sub(u, vec_scaled(v, c));
    }
    out.push_back(std::move(v));
  }
  return out;
}

} // namespace qlie
