#include "qlie/algebra.hpp"

namespace qlie {

QuadraticLieAlgebra::QuadraticLieAlgebra(std::size_t dim, const std::vector<BracketEntry>& entries,
                                         Matrix gram, std::vector<std::string> labels)
    : dim_(dim), table_(dim * dim), gram_(std::move(gram)), labels_(std::move(labels)) {
  if (gram_.rows() != dim_ || gram_.cols() != dim_)
    fail(errc::dimension_mismatch, "gram matrix must be dim x dim");
  if (!labels_.empty() && labels_.size() != dim_)
    fail(errc::dimension_mismatch, "label count must match dim");
  for (const auto& e : entries) {
    if (e.i >= e.j) fail(errc::index_error, "bracket entries require i < j");
    if (e.j >= dim_) fail(errc::index_error, "bracket index out of range");
    if (e.v.size() != dim_) fail(errc::index_error, "bracket coordinate length mismatch");
    if (!table_[pair_index(e.i, e.j)].empty())
      fail(errc::index_error, "duplicate bracket entry");
    if (!vec_is_zero(e.v)) table_[pair_index(e.i, e.j)] = e.v;
  }
}

Vec QuadraticLieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_) fail(errc::index_error, "basis index out of range");
  if (i == j) return Vec(dim_, Scalar(0));
  if (i < j) {
    const Vec& v = table_[pair_index(i, j)];
    return v.empty() ? Vec(dim_, Scalar(0)) : v;
  }
  Vec v = bracket_basis(j, i);
  for (auto& x : v) x = -x;
  return v;
}

Vec QuadraticLieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    fail(errc::dimension_mismatch, "bracket argument length mismatch");
  Vec r(dim_, Scalar(0));
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero() || i == j) continue;
      Scalar c = x[i] * y[j];
      Vec bij = bracket_basis(i, j);
      for (std::size_t k = 0; k < dim_; ++k)
        if (!bij[k].is_zero()) r[k] += c * bij[k];
    }
  }
  return r;
}

Scalar QuadraticLieAlgebra::form(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    fail(errc::dimension_mismatch, "form argument length mismatch");
  Scalar r(0);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      if (!gram_.at(i, j).is_zero() && !y[j].is_zero()) r += x[i] * gram_.at(i, j) * y[j];
  }
  return r;
}

Matrix QuadraticLieAlgebra::ad(const Vec& v) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    Vec e(dim_, Scalar(0));
    e[j] = Scalar(1);
    Vec img = bracket(v, e);
    for (std::size_t k = 0; k < dim_; ++k) m.at(k, j) = img[k];
  }
  return m;
}

std::vector<BracketEntry> QuadraticLieAlgebra::entries() const {
  std::vector<BracketEntry> out;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j) {
      const Vec& v = table_[pair_index(i, j)];
      if (!v.empty() && !vec_is_zero(v)) out.push_back({i, j, v});
    }
  return out;
}

bool QuadraticLieAlgebra::is_abelian() const { return entries().empty(); }

namespace {

std::string triple_name(std::size_t i, std::size_t j, std::size_t k) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

} // namespace

ValidationReport validate(const QuadraticLieAlgebra& g) {
  ValidationReport rep;
  std::size_t n = g.dim();
  auto note = [&rep](const std::string& what) {
    if (rep.first_failure.empty()) rep.first_failure = what;
  };

  for (std::size_t i = 0; i < n && rep.gram_symmetric; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (g.gram().at(i, j) != g.gram().at(j, i)) {
        rep.gram_symmetric = false;
        note("gram not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        break;
      }

  if (determinant(g.gram()).is_zero()) {
    rep.gram_nondegenerate = false;
    note("gram matrix is degenerate");
  }

  // Jacobi on basis triples i < j < k.
  for (std::size_t i = 0; i < n && rep.jacobi; ++i)
    for (std::size_t j = i + 1; j < n && rep.jacobi; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec s = g.bracket(g.bracket_basis(i, j), basis_unit(n, k));
        Vec t = g.bracket(g.bracket_basis(j, k), basis_unit(n, i));
        Vec u = g.bracket(g.bracket_basis(k, i), basis_unit(n, j));
        if (!vec_is_zero(vec_add(vec_add(s, t), u))) {
          rep.jacobi = false;
          note("Jacobi fails at triple " + triple_name(i, j, k));
          break;
        }
      }

  // invariance B([bi,bj],bk) = B(bi,[bj,bk]) on all triples
  for (std::size_t i = 0; i < n && rep.invariance; ++i)
    for (std::size_t j = 0; j < n && rep.invariance; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Scalar lhs = g.form(g.bracket_basis(i, j), basis_unit(n, k));
        Scalar rhs = g.form(basis_unit(n, i), g.bracket_basis(j, k));
        if (lhs != rhs) {
          rep.invariance = false;
          note("invariance fails at triple " + triple_name(i, j, k));
          break;
        }
      }

  return rep;
}

void require_valid(const QuadraticLieAlgebra& g) {
  ValidationReport rep = validate(g);
  if (!rep.pass()) fail(errc::invalid_algebra, "algebra fails axioms: " + rep.first_failure);
}

Subspace center(const QuadraticLieAlgebra& g) {
  std::size_t n = g.dim();
  // Rows of the stacked system: for each j and component k, sum_i z_i c[i][j][k] = 0.
  Matrix sys(n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      Vec cij = g.bracket_basis(i, j);
      for (std::size_t k = 0; k < n; ++k) sys.at(j * n + k, i) = cij[k];
    }
  return Subspace::row_space(kernel_basis(sys));
}

Subspace derived_ideal(const QuadraticLieAlgebra& g) {
  return bracket_span(g, Subspace::full(g.dim()), Subspace::full(g.dim()));
}

Subspace bracket_span(const QuadraticLieAlgebra& g, const Subspace& u, const Subspace& v) {
  std::vector<Vec> rows;
  for (std::size_t a = 0; a < u.dim(); ++a)
    for (std::size_t b = 0; b < v.dim(); ++b) {
      Vec w = g.bracket(u.basis_vector(a), v.basis_vector(b));
      if (!vec_is_zero(w)) rows.push_back(std::move(w));
    }
  return Subspace::span(g.dim(), rows);
}

DerivedSeries derived_series(const QuadraticLieAlgebra& g) {
  DerivedSeries out;
  out.terms.push_back(Subspace::full(g.dim()));
  // dims strictly decrease until stabilization, so dim+1 steps suffice
  for (std::size_t step = 0; step <= g.dim(); ++step) {
    const Subspace& last = out.terms.back();
    Subspace next = bracket_span(g, last, last);
    if (next == last) break;
    out.terms.push_back(next);
    if (next.dim() == 0) break;
  }
  out.solvable = out.terms.back().dim() == 0;
  return out;
}

Subspace orthogonal_complement(const QuadraticLieAlgebra& g, const Subspace& s) {
  if (s.ambient_dim() != g.dim()) fail(errc::dimension_mismatch, "complement ambient mismatch");
  if (s.dim() == 0) return Subspace::full(g.dim());
  return Subspace::row_space(kernel_basis(s.basis() * g.gram()));
}

bool is_reduced(const QuadraticLieAlgebra& g) {
  require_valid(g);
  Subspace z = center(g);
  for (std::size_t a = 0; a < z.dim(); ++a)
    for (std::size_t b = a; b < z.dim(); ++b)
      if (!g.form(z.basis_vector(a), z.basis_vector(b)).is_zero()) return false;
  return true;
}

QuadraticLieAlgebra transport(const QuadraticLieAlgebra& g, const LinearMap& a) {
  std::size_t n = g.dim();
  if (a.rows() != n || a.cols() != n) fail(errc::dimension_mismatch, "transport map shape mismatch");
  Matrix ainv;
  try {
    ainv = inverse(a);
  } catch (const error&) {
    fail(errc::singular_map, "transport requires an invertible map");
  }

  std::vector<BracketEntry> entries;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec v = a.apply(g.bracket(ainv.col(i), ainv.col(j)));
      if (!vec_is_zero(v)) entries.push_back({i, j, std::move(v)});
    }
  Matrix gram = ainv.transpose() * g.gram() * ainv;
  return QuadraticLieAlgebra(n, entries, std::move(gram), g.labels());
}

bool check_i_isomorphism(const LinearMap& a, const QuadraticLieAlgebra& g,
                         const QuadraticLieAlgebra& h) {
  std::size_t n = g.dim();
  if (h.dim() != n || a.rows() != n || a.cols() != n)
    fail(errc::dimension_mismatch, "i-isomorphism dimension mismatch");
  if (rank(a) != n) return false;
  if (a.transpose() * h.gram() * a != g.gram()) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (a.apply(g.bracket_basis(i, j)) != h.bracket(a.col(i), a.col(j))) return false;
  return true;
}

} // namespace qlie
