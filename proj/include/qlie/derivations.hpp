#pragma once

#include "qlie/algebra.hpp"

namespace qlie {

/// Deterministic echelon basis of the space of skew-symmetric derivations:
/// solutions D of D[x,y] = [Dx,y] + [x,Dy] and B(Dx,y) = -B(x,Dy).
std::vector<LinearMap> skew_derivation_basis(const QuadraticLieAlgebra& g);

/// Echelon basis of { ad(v) : v in g }; dimension is dim g - dim Z(g).
std::vector<LinearMap> inner_derivation_basis(const QuadraticLieAlgebra& g);

/// Some v with ad(v) = d, free coordinates zeroed; unique modulo the center.
/// Throws errc::not_inner when d is an outer derivation.
Vec inner_witness(const QuadraticLieAlgebra& g, const LinearMap& d);

} // namespace qlie
