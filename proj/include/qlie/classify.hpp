#pragma once

#include "qlie/algebra.hpp"

namespace qlie {

enum class Family {
  A1,
  Diamond,
  G5,
  G6Nilpotent,
  G6Diagonalizable,
  G6Jordan,
};

const char* family_name(Family f);

/// Canonical class of an indecomposable component. kappa is present exactly
/// for the diagonalizable six-dimensional family and encodes the parameter
/// lambda projectively as (1+lambda^2)^2/lambda^2; lambda itself is reported
/// only when it can be recovered inside Q(i), as the canonical representative
/// of its {±lambda, ±1/lambda} class.
struct ClassLabel {
  Family family;
  std::optional<Scalar> kappa;
  std::optional<Scalar> lambda;

  friend bool operator==(const ClassLabel& a, const ClassLabel& b) {
    return a.family == b.family && a.kappa == b.kappa && a.lambda == b.lambda;
  }
  friend bool operator!=(const ClassLabel& a, const ClassLabel& b) { return !(a == b); }
};

/// Frame exhibiting a reduced algebra as a one-dimensional double extension
/// of the abelian quadratic space q = {e, f}^perp: f central isotropic,
/// B(e, f) = 1, B(e, e) = 0, and c = ad(e) restricted to q in q-coordinates.
struct ExtensionFrame {
  Vec f;
  Vec e;
  Matrix q_basis; // rows, echelon
  LinearMap c;
  Matrix q_gram;
};

/// Orthogonal indecomposable pieces: the non-degenerate central part split
/// into lines, plus the reduced remainder (indecomposable for solvable
/// inputs of dimension <= 6). Throws errc::not_solvable or
/// errc::unsupported_dimension.
std::vector<QuadraticLieAlgebra> decompose(const QuadraticLieAlgebra& g);

/// Find an extension frame for a reduced solvable non-Abelian algebra of
/// dimension 4, 5 or 6 by scanning central candidates in echelon order.
/// Throws errc::no_frame when no candidate produces an abelian q.
ExtensionFrame extract_frame(const QuadraticLieAlgebra& g);

/// Name the orbit of a 4x4 skew map with ker(c) contained in im(c): the
/// nilpotent, diagonalizable (with kappa, best-effort lambda) or Jordan
/// family. Throws errc::not_skew, errc::kernel_not_in_image or
/// errc::unexpected_orbit.
ClassLabel classify_skew_orbit(const LinearMap& c, const Matrix& q_gram);

/// Full pipeline: decompose, then label every component; labels sorted
/// canonically (A1 lines first).
std::vector<ClassLabel> classify(const QuadraticLieAlgebra& g);

/// The paper's equivalence: equal families, and for the diagonalizable
/// six-dimensional family equal kappa (which identifies lambda with
/// -lambda and 1/lambda).
bool same_class(const ClassLabel& a, const ClassLabel& b);

} // namespace qlie
