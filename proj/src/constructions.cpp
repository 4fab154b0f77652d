#include "qlie/constructions.hpp"

#include "qlie/witt.hpp"

namespace qlie {

void check_skew_derivation(const QuadraticLieAlgebra& g, const LinearMap& c) {
  std::size_t n = g.dim();
  if (c.rows() != n || c.cols() != n)
    fail(errc::dimension_mismatch, "derivation matrix shape mismatch");

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec lhs = c.apply(g.bracket_basis(i, j));
      Vec rhs = vec_add(g.bracket(c.col(i), basis_unit(n, j)),
                        g.bracket(basis_unit(n, i), c.col(j)));
      if (lhs != rhs)
        fail(errc::not_skew_derivation,
             "derivation equation fails on basis pair (" + std::to_string(i) + "," +
                 std::to_string(j) + ")");
    }

  Matrix skew = g.gram() * c + c.transpose() * g.gram();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!skew.at(i, j).is_zero())
        fail(errc::not_skew_derivation,
             "skew-symmetry fails on basis pair (" + std::to_string(i) + "," +
                 std::to_string(j) + ")");
}

QuadraticLieAlgebra double_extension(const QuadraticLieAlgebra& g, const LinearMap& c) {
  check_skew_derivation(g, c);
  std::size_t n = g.dim();
  std::size_t ne = n, nf = n + 1; // indices of e and f in the result

  auto widen = [n](const Vec& v) {
    Vec r(n + 2, Scalar(0));
    for (std::size_t k = 0; k < n; ++k) r[k] = v[k];
    return r;
  };

  std::vector<BracketEntry> entries;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec v = widen(g.bracket_basis(i, j));
      v[nf] = g.form(c.col(i), basis_unit(n, j));
      if (!vec_is_zero(v)) entries.push_back({i, j, std::move(v)});
    }
  for (std::size_t i = 0; i < n; ++i) {
    // [b_i, e] = -c(b_i)
    Vec v = widen(c.col(i));
    for (auto& x : v) x = -x;
    if (!vec_is_zero(v)) entries.push_back({i, ne, std::move(v)});
  }

  Matrix gram(n + 2, n + 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram.at(i, j) = g.gram().at(i, j);
  gram.at(ne, nf) = Scalar(1);
  gram.at(nf, ne) = Scalar(1);

  std::vector<std::string> labels;
  if (!g.labels().empty()) {
    labels = g.labels();
    labels.push_back("e");
    labels.push_back("f");
  }
  return QuadraticLieAlgebra(n + 2, entries, std::move(gram), std::move(labels));
}

QuadraticLieAlgebra orthogonal_sum(const QuadraticLieAlgebra& g, const QuadraticLieAlgebra& h) {
  require_valid(g);
  require_valid(h);
  std::size_t n = g.dim(), m = h.dim();

  std::vector<BracketEntry> entries;
  for (const auto& e : g.entries()) {
    Vec v(n + m, Scalar(0));
    for (std::size_t k = 0; k < n; ++k) v[k] = e.v[k];
    entries.push_back({e.i, e.j, std::move(v)});
  }
  for (const auto& e : h.entries()) {
    Vec v(n + m, Scalar(0));
    for (std::size_t k = 0; k < m; ++k) v[n + k] = e.v[k];
    entries.push_back({n + e.i, n + e.j, std::move(v)});
  }

  Matrix gram(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram.at(i, j) = g.gram().at(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) gram.at(n + i, n + j) = h.gram().at(i, j);

  std::vector<std::string> labels;
  if (!g.labels().empty() && !h.labels().empty()) {
    labels = g.labels();
    for (const auto& s : h.labels()) labels.push_back(s);
  }
  return QuadraticLieAlgebra(n + m, entries, std::move(gram), std::move(labels));
}

QuadraticLieAlgebra cotangent_extension(const QuadraticLieAlgebra& g) {
  std::size_t n = g.dim();
  {
    // only antisymmetry (built in) and Jacobi are required of the input
    ValidationReport rep = validate(g);
    if (!rep.jacobi) fail(errc::not_lie_algebra, "input bracket fails Jacobi: " + rep.first_failure);
  }

  std::vector<BracketEntry> entries;
  // [b_i, b_j] unchanged inside the original block
  for (const auto& e : g.entries()) {
    Vec v(2 * n, Scalar(0));
    for (std::size_t k = 0; k < n; ++k) v[k] = e.v[k];
    entries.push_back({e.i, e.j, std::move(v)});
  }
  // coadjoint action: [b_i, b*_m] = - sum_j c[i][j][m] b*_j
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t m = 0; m < n; ++m) {
      Vec v(2 * n, Scalar(0));
      for (std::size_t j = 0; j < n; ++j) {
        Scalar cijm = g.bracket_basis(i, j)[m];
        if (!cijm.is_zero()) v[n + j] -= cijm;
      }
      if (!vec_is_zero(v)) entries.push_back({i, n + m, std::move(v)});
    }

  Matrix gram(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    gram.at(i, n + i) = Scalar(1);
    gram.at(n + i, i) = Scalar(1);
  }

  std::vector<std::string> labels;
  if (!g.labels().empty()) {
    labels = g.labels();
    for (const auto& s : g.labels()) labels.push_back(s + "*");
  }
  return QuadraticLieAlgebra(2 * n, entries, std::move(gram), std::move(labels));
}

namespace {

// Structure constants and form of g expressed in the basis given by rows.
QuadraticLieAlgebra restrict_to(const QuadraticLieAlgebra& g, const Matrix& rows,
                                std::vector<std::string> labels = {}) {
  std::size_t m = rows.rows();
  Matrix rows_t = rows.transpose();
  std::vector<BracketEntry> entries;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      Vec w = g.bracket(rows.row(a), rows.row(b));
      if (vec_is_zero(w)) continue;
      entries.push_back({a, b, solve(rows_t, w)});
    }
  Matrix gram = rows * g.gram() * rows_t;
  return QuadraticLieAlgebra(m, entries, std::move(gram), std::move(labels));
}

} // namespace

Reduction reduce(const QuadraticLieAlgebra& g) {
  require_valid(g);
  std::size_t n = g.dim();
  Subspace z = center(g);

  // diagonalize the form on the center; the anisotropic directions span the
  // maximal non-degenerate central ideal
  Matrix zgram = z.basis() * g.gram() * z.basis().transpose();
  std::vector<Vec> diag = orthogonal_basis(zgram);

  std::vector<Vec> central_rows;
  std::vector<Scalar> central_norms;
  for (const auto& coords : diag) {
    Vec v(n, Scalar(0));
    for (std::size_t a = 0; a < z.dim(); ++a) v = vec_add(v, vec_scaled(z.basis_vector(a), coords[a]));
    Scalar d = g.form(v, v);
    if (!d.is_zero()) {
      central_rows.push_back(v);
      central_norms.push_back(d);
    }
  }

  std::size_t r = central_rows.size();
  Matrix central_gram(r, r);
  for (std::size_t a = 0; a < r; ++a) central_gram.at(a, a) = central_norms[a];
  QuadraticLieAlgebra central(r, {}, std::move(central_gram));

  Subspace central_span = Subspace::span(n, central_rows);
  Subspace rest = orthogonal_complement(g, central_span);
  QuadraticLieAlgebra reduced = restrict_to(g, rest.basis());

  Matrix embedding(n, r + rest.dim());
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t i = 0; i < n; ++i) embedding.at(i, a) = central_rows[a][i];
  for (std::size_t b = 0; b < rest.dim(); ++b)
    for (std::size_t i = 0; i < n; ++i) embedding.at(i, r + b) = rest.basis().at(b, i);

  return Reduction{std::move(central), std::move(reduced), std::move(embedding)};
}

} // namespace qlie
