#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qlie/matrix.hpp"
#include "qlie/subspace.hpp"

namespace qlie {

struct BracketEntry {
  std::size_t i;
  std::size_t j; // strictly i < j
  Vec v;         // coordinates of [b_i, b_j]
};

/// Finite-dimensional Lie algebra with a bilinear form, both given by exact
/// data: a structure-constant table for pairs i < j (antisymmetry is built
/// in) and a Gram matrix. Whether the data satisfies the quadratic Lie
/// algebra axioms is the business of validate(), not of the constructor.
class QuadraticLieAlgebra {
public:
  QuadraticLieAlgebra(std::size_t dim, const std::vector<BracketEntry>& entries, Matrix gram,
                      std::vector<std::string> labels = {});

  std::size_t dim() const { return dim_; }
  const Matrix& gram() const { return gram_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// [b_i, b_j] as a coordinate vector; sign-symmetric in (i, j).
  Vec bracket_basis(std::size_t i, std::size_t j) const;

  Vec bracket(const Vec& x, const Vec& y) const;

  /// B(x, y) = x^T gram y.
  Scalar form(const Vec& x, const Vec& y) const;

  /// Matrix of ad(v): column j is [v, b_j].
  Matrix ad(const Vec& v) const;

  /// Nonzero i < j entries in canonical (i, j) order.
  std::vector<BracketEntry> entries() const;

  bool is_abelian() const;

  friend bool operator==(const QuadraticLieAlgebra& a, const QuadraticLieAlgebra& b) {
    return a.dim_ == b.dim_ && a.table_ == b.table_ && a.gram_ == b.gram_ && a.labels_ == b.labels_;
  }
  friend bool operator!=(const QuadraticLieAlgebra& a, const QuadraticLieAlgebra& b) { return !(a == b); }

private:
  std::size_t pair_index(std::size_t i, std::size_t j) const { return i * dim_ + j; }

  std::size_t dim_ = 0;
  std::vector<Vec> table_; // indexed by pair_index for i < j, others empty
  Matrix gram_;
  std::vector<std::string> labels_;
};

struct ValidationReport {
  bool antisymmetry = true; // holds by construction, reported for completeness
  bool jacobi = true;
  bool gram_symmetric = true;
  bool gram_nondegenerate = true;
  bool invariance = true;
  std::string first_failure; // empty when all axioms hold

  bool pass() const {
    return antisymmetry && jacobi && gram_symmetric && gram_nondegenerate && invariance;
  }
};

/// Check all five axioms; never throws, failures are report content.
ValidationReport validate(const QuadraticLieAlgebra& g);

/// Throws errc::invalid_algebra unless validate(g) passes.
void require_valid(const QuadraticLieAlgebra& g);

/// Kernel of the stacked ad matrices: { z : [z, b_j] = 0 for all j }.
Subspace center(const QuadraticLieAlgebra& g);

/// Span of all brackets of basis pairs.
Subspace derived_ideal(const QuadraticLieAlgebra& g);

/// Span of brackets [u, v] with u, v running over the bases of two subspaces.
Subspace bracket_span(const QuadraticLieAlgebra& g, const Subspace& u, const Subspace& v);

struct DerivedSeries {
  std::vector<Subspace> terms; // D^0 = g down to the stabilized term
  bool solvable = false;
};

DerivedSeries derived_series(const QuadraticLieAlgebra& g);

Subspace orthogonal_complement(const QuadraticLieAlgebra& g, const Subspace& s);

/// True iff the form vanishes identically on the center. Requires a valid
/// algebra (errc::invalid_algebra).
bool is_reduced(const QuadraticLieAlgebra& g);

/// Push g through an invertible map a, producing the algebra for which a is
/// an i-isomorphism from g: bracket a[a^-1 x, a^-1 y], gram pulled back by a^-1.
QuadraticLieAlgebra transport(const QuadraticLieAlgebra& g, const LinearMap& a);

/// True iff a is invertible, intertwines the brackets and preserves the forms.
bool check_i_isomorphism(const LinearMap& a, const QuadraticLieAlgebra& g,
                         const QuadraticLieAlgebra& h);

} // namespace qlie
