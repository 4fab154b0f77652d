#include "qlie/subspace.hpp"

namespace qlie {

namespace {

Matrix rref_stripped(const Matrix& rows) {
  Matrix r = rref(rows);
  std::size_t nonzero = r.rows();
  while (nonzero > 0 && vec_is_zero(r.row(nonzero - 1))) --nonzero;
  Matrix out(nonzero, r.cols());
  for (std::size_t i = 0; i < nonzero; ++i) out.set_row(i, r.row(i));
  return out;
}

} // namespace

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& vectors) {
  if (vectors.empty()) return zero(ambient);
  for (const auto& v : vectors)
    if (v.size() != ambient) fail(errc::dimension_mismatch, "span vector length mismatch");
  return Subspace(ambient, rref_stripped(Matrix::from_rows(vectors)));
}

Subspace Subspace::row_space(const Matrix& rows) {
  return Subspace(rows.cols(), rref_stripped(rows));
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_) fail(errc::dimension_mismatch, "containment ambient mismatch");
  if (vec_is_zero(v)) return true;
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < basis_.rows(); ++i) rows.push_back(basis_.row(i));
  rows.push_back(v);
  return rank(Matrix::from_rows(rows)) == dim();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) fail(errc::dimension_mismatch, "containment ambient mismatch");
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_) fail(errc::dimension_mismatch, "sum ambient mismatch");
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < dim(); ++i) rows.push_back(basis_vector(i));
  for (std::size_t i = 0; i < other.dim(); ++i) rows.push_back(other.basis_vector(i));
  return span(ambient_, rows);
}

Vec Subspace::coordinates(const Vec& v) const {
  if (v.size() != ambient_) fail(errc::dimension_mismatch, "coordinates ambient mismatch");
  return solve(basis_.transpose(), v);
}

} // namespace qlie
