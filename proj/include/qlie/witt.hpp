#pragma once

#include "qlie/matrix.hpp"
#include "qlie/subspace.hpp"

namespace qlie {

/// Witt decomposition of the ambient space against a totally isotropic U:
/// a dual isotropic partner W with B(u_i, w_j) = delta_ij and the
/// non-degenerate complement F = (U + W)^perp. The rows of w are kept in
/// dual order (not re-echeloned), since the identity pairing pins the basis.
struct WittDecomposition {
  Matrix u;       // rows: the basis of U as given
  Matrix w;       // rows: dual isotropic partners
  Subspace f;     // canonical complement
  Matrix pairing; // B(u_i, w_j), identity by construction
};

/// Extend a totally isotropic subspace to a Witt decomposition.
/// Throws errc::not_isotropic or errc::degenerate_form.
WittDecomposition witt_extend(const Matrix& gram, const Subspace& u);

/// A nonzero isotropic vector for a symmetric non-degenerate form of
/// dimension >= 2, when one is reachable over Q(i): first any isotropic
/// coordinate vector, otherwise e1 + s e2 for two orthogonal anisotropic
/// vectors with s^2 = -B(e1,e1)/B(e2,e2). Throws errc::no_square_root when
/// that ratio has no square root in Q(i).
Vec isotropic_vector(const Matrix& gram);

/// Invertible map A (columns = new basis) with A^T gram A equal to the
/// canonical block form: hyperbolic pairs [[0,1],[1,0]] followed by a single
/// unit vector when the dimension is odd. Throws errc::no_square_root when
/// not constructible over Q(i).
LinearMap canonical_gram_basis(const Matrix& gram);

/// The canonical block matrix canonical_gram_basis targets.
Matrix canonical_gram_blocks(std::size_t n);

/// Pairwise B-orthogonal basis rows for a symmetric (possibly degenerate)
/// form, produced by symmetric elimination without square roots.
std::vector<Vec> orthogonal_basis(const Matrix& gram);

} // namespace qlie
