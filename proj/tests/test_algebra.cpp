#include <doctest.h>

#include "qlie/algebra.hpp"
#include "qlie/catalog.hpp"
#include "qlie/io.hpp"
#include "support.hpp"

using namespace qlie;
using namespace qlie::test;

namespace {

// diamond with [X,Q] flipped to +Q: antisymmetric and Jacobi-closed but the
// form is no longer invariant
QuadraticLieAlgebra broken_diamond() {
  std::vector<BracketEntry> entries = {
      {0, 1, V({0, 1, 0, 0})},
      {0, 2, V({0, 0, 1, 0})}, // [X,Q] = +Q instead of -Q
      {1, 2, V({0, 0, 0, 1})},
  };
  Matrix gram(4, 4);
  gram.at(0, 3) = gram.at(3, 0) = S(1);
  gram.at(1, 2) = gram.at(2, 1) = S(1);
  return QuadraticLieAlgebra(4, entries, std::move(gram));
}

// span{A,B,C} with [A,B] = -A, [B,C] = -C, [C,A] = -B; a non-solvable
// bracket used as the derived-series counterexample
QuadraticLieAlgebra sl2_like() {
  std::vector<BracketEntry> entries = {
      {0, 1, V({-1, 0, 0})},
      {1, 2, V({0, 0, -1})},
      {0, 2, V({0, 1, 0})}, // [A,C] = B
  };
  return QuadraticLieAlgebra(3, entries, Matrix::identity(3));
}

} // namespace

TEST_CASE("construction rejects bad bracket tables") {
  CHECK_THROWS_AS(QuadraticLieAlgebra(2, {{0, 0, V({1, 0})}}, Matrix::identity(2)), error);
  CHECK_THROWS_AS(QuadraticLieAlgebra(2, {{1, 0, V({1, 0})}}, Matrix::identity(2)), error);
  CHECK_THROWS_AS(QuadraticLieAlgebra(2, {{0, 5, V({1, 0})}}, Matrix::identity(2)), error);
  CHECK_THROWS_AS(QuadraticLieAlgebra(2, {{0, 1, V({1})}}, Matrix::identity(2)), error);
  CHECK_THROWS_AS(QuadraticLieAlgebra(2, {{0, 1, V({1, 0})}, {0, 1, V({0, 1})}},
                                      Matrix::identity(2)),
                  error);
}

TEST_CASE("validate: catalog diamond passes all axioms") {
  ValidationReport rep = validate(make_diamond());
  CHECK(rep.pass());
  CHECK(rep.first_failure.empty());
}

TEST_CASE("validate: zero gram fails non-degeneracy") {
  QuadraticLieAlgebra g(3, {}, Matrix(3, 3));
  ValidationReport rep = validate(g);
  CHECK(!rep.pass());
  CHECK(!rep.gram_nondegenerate);
  CHECK(rep.jacobi);
}

TEST_CASE("validate: flipped diamond bracket breaks invariance at (X,Q,P)") {
  QuadraticLieAlgebra g = broken_diamond();
  ValidationReport rep = validate(g);
  CHECK(!rep.pass());
  CHECK(!rep.invariance);
  CHECK(!rep.jacobi); // the flip also unbalances (X,P,Q)
  CHECK(!rep.first_failure.empty());
  // the invariance defect itself: B([X,Q],P) = 1 but B(X,[Q,P]) = -1
  Vec X = basis_unit(4, 0), P = basis_unit(4, 1), Q = basis_unit(4, 2);
  CHECK(g.form(g.bracket(X, Q), P) == S(1));
  CHECK(g.form(X, g.bracket(Q, P)) == S(-1));
}

TEST_CASE("bracket contraction") {
  QuadraticLieAlgebra g4 = make_diamond();
  // [X, P] = P
  CHECK(g4.bracket(basis_unit(4, 0), basis_unit(4, 1)) == V({0, 1, 0, 0}));
  // [P, P] = 0
  CHECK(vec_is_zero(g4.bracket(basis_unit(4, 1), basis_unit(4, 1))));
  // bilinearity against a combination
  Vec x = V({2, 0, 0, 0}), y = V({0, 3, -1, 0});
  CHECK(g4.bracket(x, y) == V({0, 6, 2, 0})); // 2*3*[X,P] + 2*(-1)*[X,Q]

  QuadraticLieAlgebra g5 = make_g5();
  // [X1, X2] = T
  CHECK(g5.bracket(basis_unit(5, 3), basis_unit(5, 4)) == V({0, 0, 1, 0, 0}));

  CHECK_THROWS_AS(g4.bracket(V({1, 0}), basis_unit(4, 0)), error);
}

TEST_CASE("center computations") {
  CHECK(center(make_diamond()) == Subspace::span(4, {V({0, 0, 0, 1})}));
  CHECK(center(make_g5()) == Subspace::span(5, {V({1, 0, 0, 0, 0}), V({0, 1, 0, 0, 0})}));
  CHECK(center(make_abelian(4)) == Subspace::full(4));
  // g6_1: center is span{Z1, Z3, X2}
  CHECK(center(make_g6_1()) ==
        Subspace::span(6, {V({1, 0, 0, 0, 0, 0}), V({0, 0, 1, 0, 0, 0}), V({0, 0, 0, 0, 1, 0})}));
}

TEST_CASE("derived ideal") {
  // diamond: span{Z, P, Q}
  CHECK(derived_ideal(make_diamond()) ==
        Subspace::span(4, {V({0, 1, 0, 0}), V({0, 0, 1, 0}), V({0, 0, 0, 1})}));
  CHECK(derived_ideal(make_abelian(3)).dim() == 0);
  // g6_2(lambda): span{Z1, Z2, Z3, X1, X2}
  CHECK(derived_ideal(make_g6_2(S(3))) ==
        Subspace::span(6, {basis_unit(6, 0), basis_unit(6, 1), basis_unit(6, 2), basis_unit(6, 3),
                           basis_unit(6, 4)}));
}

TEST_CASE("derived series: diamond chain and abelian base case") {
  DerivedSeries s4 = derived_series(make_diamond());
  REQUIRE(s4.terms.size() == 4);
  CHECK(s4.terms[0].dim() == 4);
  CHECK(s4.terms[1].dim() == 3);
  CHECK(s4.terms[2] == Subspace::span(4, {V({0, 0, 0, 1})}));
  CHECK(s4.terms[3].dim() == 0);
  CHECK(s4.solvable);

  DerivedSeries sa = derived_series(make_abelian(5));
  CHECK(sa.terms.size() == 2);
  CHECK(sa.solvable);
}

TEST_CASE("derived series flags the non-solvable subalgebra from the dim-5 analysis") {
  DerivedSeries s = derived_series(sl2_like());
  CHECK(!s.solvable);
  CHECK(s.terms.back().dim() == 3);
}

TEST_CASE("orthogonal complements") {
  QuadraticLieAlgebra g4 = make_diamond();
  Subspace z = Subspace::span(4, {V({0, 0, 0, 1})});
  // span{Z}^perp = span{Z, P, Q} = [g, g]
  CHECK(orthogonal_complement(g4, z) == derived_ideal(g4));
  CHECK(orthogonal_complement(g4, Subspace::full(4)).dim() == 0);
  CHECK(orthogonal_complement(g4, Subspace::zero(4)) == Subspace::full(4));

  SplitMix64 rng(101);
  for (const auto& g : {make_diamond(), make_g5(), make_g6_1()}) {
    for (int t = 0; t < 100; ++t) {
      std::size_t d = 1 + rng.below(g.dim());
      std::vector<Vec> vecs;
      for (std::size_t k = 0; k < d; ++k) vecs.push_back(random_vec(rng, g.dim()));
      Subspace s = Subspace::span(g.dim(), vecs);
      CHECK(s.dim() + orthogonal_complement(g, s).dim() == g.dim());
    }
  }
}

TEST_CASE("center-perp equals derived ideal on the catalog") {
  for (const auto& g : {make_diamond(), make_g5(), make_g6_1(), make_g6_2(S(2)),
                        make_g6_2(Si(0, 1)), make_g6_3()}) {
    CHECK(orthogonal_complement(g, center(g)) == derived_ideal(g));
  }
}

TEST_CASE("complement of an ideal is an ideal") {
  for (const auto& g : {make_diamond(), make_g5(), make_g6_1(), make_g6_2(S(2)), make_g6_3()}) {
    for (const Subspace& ideal : {derived_ideal(g), center(g)}) {
      Subspace perp = orthogonal_complement(g, ideal);
      CHECK(perp.contains(bracket_span(g, Subspace::full(g.dim()), perp)));
    }
  }
}

TEST_CASE("reduced detection") {
  CHECK(is_reduced(make_diamond()));
  CHECK(is_reduced(make_g5()));
  CHECK(is_reduced(make_g6_1())); // center span{Z1, Z3, X2} is totally isotropic
  CHECK(!is_reduced(make_abelian(2)));
  CHECK_THROWS_AS(is_reduced(broken_diamond()), error);
}

TEST_CASE("transport by the identity is the identity") {
  QuadraticLieAlgebra g5 = make_g5();
  CHECK(transport(g5, Matrix::identity(5)) == g5);
}

TEST_CASE("transport mirrors the rescaling step Z -> 2Z, X -> X/2") {
  Matrix a = Matrix::identity(4);
  a.at(0, 0) = Scalar(Rational(1, 2)); // X column
  a.at(3, 3) = S(2);                   // Z column
  QuadraticLieAlgebra h = transport(make_diamond(), a);
  CHECK(validate(h).pass());
  CHECK(check_i_isomorphism(a, make_diamond(), h));
}

TEST_CASE("transport round-trips through the inverse map") {
  SplitMix64 rng(7);
  for (const auto& g : {make_diamond(), make_g5()}) {
    for (int t = 0; t < 5; ++t) {
      Matrix a = random_invertible(rng, g.dim());
      QuadraticLieAlgebra h = transport(g, a);
      CHECK(validate(h).pass());
      CHECK(check_i_isomorphism(a, g, h));
      QuadraticLieAlgebra back = transport(h, inverse(a));
      // labels survive, structure returns exactly
      CHECK(back == g);
    }
  }
  CHECK_THROWS_AS(transport(make_diamond(), Matrix(4, 4)), error);
}

TEST_CASE("i-isomorphism checker accepts the lambda <-> 1/lambda swap") {
  CHECK(check_i_isomorphism(Matrix::identity(4), make_diamond(), make_diamond()));

  // Z1<->Z2, X1<->X2, X3 -> lambda X3, Z3 -> (1/lambda) Z3
  Scalar lam = S(2);
  Matrix a(6, 6);
  a.at(1, 0) = S(1); // A Z1 = Z2
  a.at(0, 1) = S(1); // A Z2 = Z1
  a.at(2, 2) = lam.inverse();
  a.at(4, 3) = S(1); // A X1 = X2
  a.at(3, 4) = S(1); // A X2 = X1
  a.at(5, 5) = lam;
  CHECK(check_i_isomorphism(a, make_g6_2(lam), make_g6_2(lam.inverse())));

  // scaling X3 alone breaks the pairing with Z3
  Matrix bad = Matrix::identity(6);
  bad.at(5, 5) = S(2);
  CHECK(!check_i_isomorphism(bad, make_g6_2(S(1)), make_g6_2(S(1))));
}

TEST_CASE("derived ideal of non-Abelian catalog algebras has dimension >= 3") {
  for (const auto& g : {make_diamond(), make_g5(), make_g6_1(), make_g6_2(S(2)), make_g6_3()})
    CHECK(derived_ideal(g).dim() >= 3);
}
