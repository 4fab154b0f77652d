#pragma once

#include "qlie/matrix.hpp"

namespace qlie {

/// Subspace of Q(i)^n held as a basis-as-rows matrix in reduced row echelon
/// form. The representation is canonical: equal subspaces compare equal.
class Subspace {
public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient) { return Subspace(ambient, Matrix(0, ambient)); }
  static Subspace full(std::size_t ambient) { return Subspace(ambient, Matrix::identity(ambient)); }
  static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors);
  static Subspace row_space(const Matrix& rows);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vec basis_vector(std::size_t k) const { return basis_.row(k); }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  Subspace sum(const Subspace& other) const;

  /// Coordinates of v in this basis; throws errc::inconsistent_system when
  /// v is outside the subspace.
  Vec coordinates(const Vec& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
  Subspace(std::size_t ambient, Matrix basis) : ambient_(ambient), basis_(std::move(basis)) {}

  std::size_t ambient_ = 0;
  Matrix basis_; // RREF, no zero rows
};

} // namespace qlie
