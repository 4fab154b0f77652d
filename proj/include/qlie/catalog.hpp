#pragma once

#include <optional>
#include <string>

#include "qlie/algebra.hpp"

namespace qlie {

/// Constructors for the named algebras, with the basis orderings fixed once
/// and for all: diamond (X, P, Q, Z), g5 (Z1, Z2, T, X1, X2), g6 families
/// (Z1, Z2, Z3, X1, X2, X3). Every output passes validate.
QuadraticLieAlgebra make_abelian(std::size_t n);
QuadraticLieAlgebra make_diamond();
QuadraticLieAlgebra make_g5();
QuadraticLieAlgebra make_g6_1();
QuadraticLieAlgebra make_g6_2(const Scalar& lambda); // errc::bad_parameter on lambda = 0
QuadraticLieAlgebra make_g6_3();

/// Name dispatch for the CLI: "abelian<N>", "diamond", "g5", "g6_1",
/// "g6_2" (lambda required), "g6_3".
QuadraticLieAlgebra make_catalog(const std::string& name, const std::optional<Scalar>& lambda);

} // namespace qlie
