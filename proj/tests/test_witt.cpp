#include <doctest.h>

#include "qlie/catalog.hpp"
#include "qlie/io.hpp"
#include "qlie/witt.hpp"
#include "support.hpp"

using namespace qlie;
using namespace qlie::test;

namespace {

Scalar pair_with(const Matrix& gram, const Vec& x, const Vec& y) {
  Scalar r(0);
  for (std::size_t i = 0; i < gram.rows(); ++i)
    for (std::size_t j = 0; j < gram.cols(); ++j) r += x[i] * gram.at(i, j) * y[j];
  return r;
}

void check_witt_invariants(const Matrix& gram, const Subspace& u, const WittDecomposition& wd) {
  std::size_t k = u.dim();
  REQUIRE(wd.w.rows() == k);
  CHECK(wd.pairing == Matrix::identity(k));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      CHECK(pair_with(gram, wd.u.row(a), wd.w.row(b)) == (a == b ? Scalar(1) : Scalar(0)));
      CHECK(pair_with(gram, wd.w.row(a), wd.w.row(b)).is_zero());
      CHECK(pair_with(gram, wd.u.row(a), wd.u.row(b)).is_zero());
    }
  // f is orthogonal to both isotropic blocks and non-degenerate
  for (std::size_t c = 0; c < wd.f.dim(); ++c)
    for (std::size_t a = 0; a < k; ++a) {
      CHECK(pair_with(gram, wd.f.basis_vector(c), wd.u.row(a)).is_zero());
      CHECK(pair_with(gram, wd.f.basis_vector(c), wd.w.row(a)).is_zero());
    }
  Matrix f_gram = wd.f.basis() * gram * wd.f.basis().transpose();
  if (wd.f.dim() > 0) CHECK(!determinant(f_gram).is_zero());
  // the three blocks fill the space
  std::vector<Vec> all;
  for (std::size_t a = 0; a < k; ++a) all.push_back(wd.u.row(a));
  for (std::size_t a = 0; a < k; ++a) all.push_back(wd.w.row(a));
  for (std::size_t c = 0; c < wd.f.dim(); ++c) all.push_back(wd.f.basis_vector(c));
  CHECK(Subspace::span(gram.rows(), all) == Subspace::full(gram.rows()));
}

} // namespace

TEST_CASE("witt_extend on the hyperbolic plane") {
  Matrix gram = M({{0, 1}, {1, 0}});
  Subspace u = Subspace::span(2, {V({1, 0})});
  WittDecomposition wd = witt_extend(gram, u);
  CHECK(wd.w == M({{0, 1}}));
  CHECK(wd.f.dim() == 0);
  check_witt_invariants(gram, u, wd);
}

TEST_CASE("witt_extend over the euclidean 3 space needs an i") {
  Matrix gram = Matrix::identity(3);
  Subspace u = Subspace::span(3, {Vec{S(1), Si(0, 1), S(0)}});
  WittDecomposition wd = witt_extend(gram, u);
  REQUIRE(wd.w.rows() == 1);
  CHECK(wd.w.row(0) == Vec{Scalar(Rational(1, 2)), Scalar(Rational(0), Rational(-1, 2)), S(0)});
  CHECK(wd.f == Subspace::span(3, {V({0, 0, 1})}));
  check_witt_invariants(gram, u, wd);
}

TEST_CASE("witt_extend on the g5 form against the center span") {
  QuadraticLieAlgebra g5 = make_g5();
  Subspace u = Subspace::span(5, {basis_unit(5, 0), basis_unit(5, 1)}); // Z1, Z2
  WittDecomposition wd = witt_extend(g5.gram(), u);
  check_witt_invariants(g5.gram(), u, wd);
  REQUIRE(wd.f.dim() == 1);
  Vec t = wd.f.basis_vector(0);
  CHECK(!pair_with(g5.gram(), t, t).is_zero());
}

TEST_CASE("witt_extend rejects bad inputs") {
  CHECK_THROWS_AS(witt_extend(M({{1, 0}, {0, 1}}), Subspace::span(2, {V({1, 0})})), error);
  try {
    witt_extend(M({{1, 0}, {0, 1}}), Subspace::span(2, {V({1, 0})}));
  } catch (const error& e) {
    CHECK(e.code() == errc::not_isotropic);
  }
  CHECK_THROWS_AS(witt_extend(M({{1, 1}, {1, 1}}), Subspace::span(2, {V({1, -1})})), error);
  try {
    witt_extend(M({{1, 1}, {1, 1}}), Subspace::span(2, {V({1, -1})}));
  } catch (const error& e) {
    CHECK(e.code() == errc::degenerate_form);
  }
}

TEST_CASE("isotropic_vector worked cases") {
  CHECK(isotropic_vector(M({{0, 1}, {1, 0}})) == V({1, 0}));
  CHECK(isotropic_vector(Matrix::identity(2)) == Vec{S(1), Si(0, 1)});
  CHECK_THROWS_AS(isotropic_vector(M({{1, 0}, {0, 2}})), error);
  try {
    isotropic_vector(M({{1, 0}, {0, 2}}));
  } catch (const error& e) {
    CHECK(e.code() == errc::no_square_root);
  }
}

TEST_CASE("canonical_gram_basis reaches the block form") {
  CHECK(canonical_gram_basis(M({{0, 1}, {1, 0}})) == Matrix::identity(2));

  Matrix a2 = canonical_gram_basis(Matrix::identity(2));
  CHECK(a2.col(0) == Vec{S(1), Si(0, 1)});
  CHECK(a2.col(1) == Vec{Scalar(Rational(1, 2)), Scalar(Rational(0), Rational(-1, 2))});
  CHECK(a2.transpose() * Matrix::identity(2) * a2 == canonical_gram_blocks(2));

  Matrix a3 = canonical_gram_basis(Matrix::identity(3));
  CHECK(a3.transpose() * Matrix::identity(3) * a3 == canonical_gram_blocks(3));

  for (const auto& g : {make_diamond(), make_g5(), make_g6_2(S(2))}) {
    Matrix a = canonical_gram_basis(g.gram());
    CHECK(a.transpose() * g.gram() * a == canonical_gram_blocks(g.dim()));
  }
}

TEST_CASE("random witt decompositions in dimensions up to 8") {
  SplitMix64 rng(2024);
  int done = 0;
  while (done < 100) {
    std::size_t n = 2 + rng.below(7); // 2..8
    Matrix base = canonical_gram_blocks(n);
    std::size_t pairs = n / 2;
    std::size_t take = 1 + rng.below(pairs);

    // coordinate isotropic subspace: first member of each chosen pair
    std::vector<Vec> iso;
    for (std::size_t p = 0; p < take; ++p) iso.push_back(basis_unit(n, 2 * p));

    // move it through a seeded isometry of the block form, then change
    // coordinates entirely with a random congruence
    Matrix iso_map = random_isometry(abelian_space(base), rng.next());
    Matrix t = random_invertible(rng, n);
    Matrix t_inv = inverse(t);
    Matrix gram = t.transpose() * base * t;

    std::vector<Vec> moved;
    for (const auto& v : iso) moved.push_back(t_inv.apply(iso_map.apply(v)));
    Subspace u = Subspace::span(n, moved);
    REQUIRE(u.dim() == take);

    WittDecomposition wd = witt_extend(gram, u);
    check_witt_invariants(gram, u, wd);
    ++done;
  }
}

TEST_CASE("orthogonal_basis diagonalizes degenerate forms too") {
  Matrix gram = M({{1, 0, 0}, {0, 0, 0}, {0, 0, -1}});
  auto rows = orthogonal_basis(gram);
  REQUIRE(rows.size() == 3);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = a + 1; b < 3; ++b) CHECK(pair_with(gram, rows[a], rows[b]).is_zero());

  // hyperbolic plane: all-isotropic diagonal, fixed by folding
  Matrix hyp = M({{0, 1}, {1, 0}});
  auto hrows = orthogonal_basis(hyp);
  REQUIRE(hrows.size() == 2);
  CHECK(pair_with(hyp, hrows[0], hrows[1]).is_zero());
  CHECK(!pair_with(hyp, hrows[0], hrows[0]).is_zero());
  CHECK(!pair_with(hyp, hrows[1], hrows[1]).is_zero());
}
