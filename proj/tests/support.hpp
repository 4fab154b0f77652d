#pragma once

// shared helpers for the unit and acceptance suites

#include <string>
#include <vector>

#include "qlie/algebra.hpp"
#include "qlie/io.hpp"

namespace qlie::test {

inline Scalar S(int num, int den = 1) { return Scalar(Rational(num, den)); }

inline Scalar Si(int re, int im) { return Scalar(Rational(re), Rational(im)); }

inline Vec V(std::initializer_list<int> xs) {
  Vec v;
  for (int x : xs) v.push_back(S(x));
  return v;
}

inline Matrix M(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<Vec> r;
  for (const auto& row : rows) r.push_back(V(row));
  return Matrix::from_rows(r);
}

inline Scalar random_scalar(SplitMix64& rng) {
  auto part = [&rng] {
    int num = static_cast<int>(rng.below(9)) - 4;
    int den = static_cast<int>(rng.below(3)) + 1;
    return Rational(num, den);
  };
  return Scalar(part(), part());
}

inline Vec random_vec(SplitMix64& rng, std::size_t n) {
  Vec v(n);
  for (auto& x : v) x = random_scalar(rng);
  return v;
}

inline Matrix random_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = random_scalar(rng);
  return m;
}

// unit lower x unit upper product: always invertible, entries stay small
inline Matrix random_invertible(SplitMix64& rng, std::size_t n) {
  Matrix lo = Matrix::identity(n), up = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i > j) lo.at(i, j) = S(static_cast<int>(rng.below(5)) - 2);
      if (i < j) up.at(i, j) = S(static_cast<int>(rng.below(5)) - 2);
    }
  return lo * up;
}

inline Matrix random_antisymmetric(SplitMix64& rng, std::size_t n) {
  Matrix k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      k.at(i, j) = S(static_cast<int>(rng.below(7)) - 3, static_cast<int>(rng.below(2)) + 1);
      k.at(j, i) = -k.at(i, j);
    }
  return k;
}

// abelian quadratic space on an arbitrary symmetric non-degenerate gram
inline QuadraticLieAlgebra abelian_space(Matrix gram) {
  return QuadraticLieAlgebra(gram.rows(), {}, std::move(gram));
}

inline Matrix hyperbolic_gram(std::size_t pairs) {
  Matrix g(2 * pairs, 2 * pairs);
  for (std::size_t i = 0; i < pairs; ++i) {
    g.at(i, pairs + i) = Scalar(1);
    g.at(pairs + i, i) = Scalar(1);
  }
  return g;
}

} // namespace qlie::test
