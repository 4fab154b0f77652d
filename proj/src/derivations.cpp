#include "qlie/derivations.hpp"

namespace qlie {

namespace {

// unknown layout: D(r, c) at index r*n + c
std::vector<LinearMap> reshape_rows(const Matrix& rows, std::size_t n) {
  std::vector<LinearMap> out;
  for (std::size_t k = 0; k < rows.rows(); ++k) {
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m.at(r, c) = rows.at(k, r * n + c);
    out.push_back(std::move(m));
  }
  return out;
}

} // namespace

std::vector<LinearMap> skew_derivation_basis(const QuadraticLieAlgebra& g) {
  require_valid(g);
  std::size_t n = g.dim();
  std::size_t unknowns = n * n;

  // derivation equations over all ordered basis pairs, then the skew
  // equations; redundancy is harmless, the solver sees one big system
  std::vector<Vec> eqs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec cij = g.bracket_basis(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        Vec row(unknowns, Scalar(0));
        // (D [bi,bj])_k = sum_m D(k,m) c[i][j][m]
        for (std::size_t m = 0; m < n; ++m) row[k * n + m] += cij[m];
        // ([D bi, bj])_k = sum_m D(m,i) c[m][j][k]
        for (std::size_t m = 0; m < n; ++m) row[m * n + i] -= g.bracket_basis(m, j)[k];
        // ([bi, D bj])_k = sum_m D(m,j) c[i][m][k]
        for (std::size_t m = 0; m < n; ++m) row[m * n + j] -= g.bracket_basis(i, m)[k];
        if (!vec_is_zero(row)) eqs.push_back(std::move(row));
      }
    }
  // (G D + D^T G)(i,j) = sum_m G(i,m) D(m,j) + D(m,i) G(m,j)
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec row(unknowns, Scalar(0));
      for (std::size_t m = 0; m < n; ++m) {
        row[m * n + j] += g.gram().at(i, m);
        row[m * n + i] += g.gram().at(m, j);
      }
      if (!vec_is_zero(row)) eqs.push_back(std::move(row));
    }

  Matrix sys = eqs.empty() ? Matrix(0, unknowns) : Matrix::from_rows(eqs);
  return reshape_rows(kernel_basis(sys), n);
}

std::vector<LinearMap> inner_derivation_basis(const QuadraticLieAlgebra& g) {
  require_valid(g);
  std::size_t n = g.dim();
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix adi = g.ad(basis_unit(n, i));
    Vec row(n * n, Scalar(0));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) row[r * n + c] = adi.at(r, c);
    if (!vec_is_zero(row)) rows.push_back(std::move(row));
  }
  if (rows.empty()) return {};
  return reshape_rows(Subspace::span(n * n, rows).basis(), n);
}

Vec inner_witness(const QuadraticLieAlgebra& g, const LinearMap& d) {
  std::size_t n = g.dim();
  if (d.rows() != n || d.cols() != n) fail(errc::dimension_mismatch, "derivation shape mismatch");

  // ad(v) = d: for each column j and component k, sum_i v_i c[i][j][k] = d(k,j)
  Matrix sys(n * n, n);
  Vec rhs(n * n, Scalar(0));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      Vec cij = g.bracket_basis(i, j);
      for (std::size_t k = 0; k < n; ++k) sys.at(j * n + k, i) = cij[k];
    }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) rhs[j * n + k] = d.at(k, j);

  try {
    return solve(sys, rhs);
  } catch (const error& e) {
    if (e.code() == errc::inconsistent_system)
      fail(errc::not_inner, "derivation is outer: no v with ad(v) = D");
    throw;
  }
}

} // namespace qlie
