#include "qlie/catalog.hpp"

namespace qlie {

namespace {

Vec unit(std::size_t n, std::size_t k) { return basis_unit(n, k); }

Matrix dual_pair_gram(std::size_t pairs) {
  // B(X_i, Z_j) = delta_ij with basis (Z_1..Z_p, X_1..X_p)
  Matrix g(2 * pairs, 2 * pairs);
  for (std::size_t i = 0; i < pairs; ++i) {
    g.at(i, pairs + i) = Scalar(1);
    g.at(pairs + i, i) = Scalar(1);
  }
  return g;
}

} // namespace

QuadraticLieAlgebra make_abelian(std::size_t n) {
  return QuadraticLieAlgebra(n, {}, Matrix::identity(n));
}

QuadraticLieAlgebra make_diamond() {
  // basis X, P, Q, Z
  std::size_t X = 0, P = 1, Q = 2, Z = 3;
  std::vector<BracketEntry> entries = {
      {X, P, unit(4, P)},
      {X, Q, vec_scaled(unit(4, Q), Scalar(-1))},
      {P, Q, unit(4, Z)},
  };
  Matrix gram(4, 4);
  gram.at(X, Z) = Scalar(1);
  gram.at(Z, X) = Scalar(1);
  gram.at(P, Q) = Scalar(1);
  gram.at(Q, P) = Scalar(1);
  return QuadraticLieAlgebra(4, entries, std::move(gram), {"X", "P", "Q", "Z"});
}

QuadraticLieAlgebra make_g5() {
  // basis Z1, Z2, T, X1, X2
  std::size_t Z1 = 0, Z2 = 1, T = 2, X1 = 3, X2 = 4;
  std::vector<BracketEntry> entries = {
      {T, X1, unit(5, Z2)},                         // [X1, T] = -Z2
      {T, X2, vec_scaled(unit(5, Z1), Scalar(-1))}, // [X2, T] = Z1
      {X1, X2, unit(5, T)},
  };
  Matrix gram(5, 5);
  gram.at(T, T) = Scalar(1);
  gram.at(X1, Z1) = Scalar(1);
  gram.at(Z1, X1) = Scalar(1);
  gram.at(X2, Z2) = Scalar(1);
  gram.at(Z2, X2) = Scalar(1);
  return QuadraticLieAlgebra(5, entries, std::move(gram), {"Z1", "Z2", "T", "X1", "X2"});
}

QuadraticLieAlgebra make_g6_1() {
  std::size_t Z1 = 0, Z2 = 1, Z3 = 2, X1 = 3, X2 = 4, X3 = 5;
  std::vector<BracketEntry> entries = {
      {Z2, X3, vec_scaled(unit(6, Z1), Scalar(-1))}, // [X3, Z2] = Z1
      {X1, X3, unit(6, X2)},                         // [X3, X1] = -X2
      {Z2, X1, unit(6, Z3)},
  };
  return QuadraticLieAlgebra(6, entries, dual_pair_gram(3),
                             {"Z1", "Z2", "Z3", "X1", "X2", "X3"});
}

QuadraticLieAlgebra make_g6_2(const Scalar& lambda) {
  if (lambda.is_zero()) fail(errc::bad_parameter, "g6_2 requires lambda != 0");
  std::size_t Z1 = 0, Z2 = 1, Z3 = 2, X1 = 3, X2 = 4, X3 = 5;
  std::vector<BracketEntry> entries = {
      {Z1, X3, vec_scaled(unit(6, Z1), Scalar(-1))},      // [X3, Z1] = Z1
      {Z2, X3, vec_scaled(unit(6, Z2), -lambda)},         // [X3, Z2] = lambda Z2
      {X1, X3, unit(6, X1)},                              // [X3, X1] = -X1
      {X2, X3, vec_scaled(unit(6, X2), lambda)},          // [X3, X2] = -lambda X2
      {Z1, X1, unit(6, Z3)},
      {Z2, X2, vec_scaled(unit(6, Z3), lambda)},
  };
  return QuadraticLieAlgebra(6, entries, dual_pair_gram(3),
                             {"Z1", "Z2", "Z3", "X1", "X2", "X3"});
}

QuadraticLieAlgebra make_g6_3() {
  std::size_t Z1 = 0, Z2 = 1, Z3 = 2, X1 = 3, X2 = 4, X3 = 5;
  Vec z12 = vec_add(unit(6, Z1), unit(6, Z2));
  Vec x12 = vec_add(unit(6, X1), unit(6, X2));
  std::vector<BracketEntry> entries = {
      {Z1, X3, vec_scaled(unit(6, Z1), Scalar(-1))}, // [X3, Z1] = Z1
      {Z2, X3, vec_scaled(z12, Scalar(-1))},         // [X3, Z2] = Z1 + Z2
      {X1, X3, x12},                                 // [X3, X1] = -X1 - X2
      {X2, X3, unit(6, X2)},                         // [X3, X2] = -X2
      {Z1, X1, unit(6, Z3)},
      {Z2, X1, unit(6, Z3)},
      {Z2, X2, unit(6, Z3)},
  };
  return QuadraticLieAlgebra(6, entries, dual_pair_gram(3),
                             {"Z1", "Z2", "Z3", "X1", "X2", "X3"});
}

QuadraticLieAlgebra make_catalog(const std::string& name, const std::optional<Scalar>& lambda) {
  auto reject_lambda = [&](const char* what) {
    if (lambda) fail(errc::bad_parameter, std::string(what) + " takes no lambda parameter");
  };
  if (name.rfind("abelian", 0) == 0) {
    reject_lambda("abelian");
    std::string tail = name.substr(7);
    if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos)
      fail(errc::bad_parameter, "abelian needs a dimension suffix, e.g. abelian3");
    std::size_t n = std::stoul(tail);
    if (n == 0 || n > 64) fail(errc::bad_parameter, "abelian dimension out of range");
    return make_abelian(n);
  }
  if (name == "diamond") {
    reject_lambda("diamond");
    return make_diamond();
  }
  if (name == "g5") {
    reject_lambda("g5");
    return make_g5();
  }
  if (name == "g6_1") {
    reject_lambda("g6_1");
    return make_g6_1();
  }
  if (name == "g6_2") {
    if (!lambda) fail(errc::bad_parameter, "g6_2 requires --lambda");
    return make_g6_2(*lambda);
  }
  if (name == "g6_3") {
    reject_lambda("g6_3");
    return make_g6_3();
  }
  fail(errc::bad_parameter, "unknown catalog name: " + name);
}

} // namespace qlie
