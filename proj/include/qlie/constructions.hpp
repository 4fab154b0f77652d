#pragma once

#include "qlie/algebra.hpp"

namespace qlie {

/// Split of an algebra into a non-degenerate central part and a reduced
/// remainder. The embedding maps coordinates of central_part + reduced_part
/// (in that block order) back into the original algebra and is an
/// i-isomorphism onto it.
struct Reduction {
  QuadraticLieAlgebra central_part; // abelian with non-degenerate (diagonal) form
  QuadraticLieAlgebra reduced_part; // reduced, or zero-dimensional
  LinearMap embedding;
};

/// Throws errc::not_skew_derivation naming the first failed equation unless
/// c is a derivation of g that is skew with respect to the form.
void check_skew_derivation(const QuadraticLieAlgebra& g, const LinearMap& c);

/// One-dimensional double extension of g by the skew derivation c. Basis
/// order of the result: original basis, then e, then f. Bracket corrections
/// land on f; [e, x] = c(x); f is central. The form gains the hyperbolic
/// pair B(e, f) = 1.
QuadraticLieAlgebra double_extension(const QuadraticLieAlgebra& g, const LinearMap& c);

/// Block-diagonal sum with [g, h] = 0; both summands must validate.
QuadraticLieAlgebra orthogonal_sum(const QuadraticLieAlgebra& g, const QuadraticLieAlgebra& h);

/// T*(g) on g + g*: coadjoint action on the dual part and the canonical
/// pairing as form. Only the bracket structure of the input is used; its
/// antisymmetry and Jacobi identity are validated, the form is ignored.
QuadraticLieAlgebra cotangent_extension(const QuadraticLieAlgebra& g);

/// Split off the maximal non-degenerate part of the center; the complement
/// carries the inherited structure and a totally isotropic center.
Reduction reduce(const QuadraticLieAlgebra& g);

} // namespace qlie
