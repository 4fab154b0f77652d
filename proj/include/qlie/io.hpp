#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "qlie/algebra.hpp"

namespace qlie {

/// Parse the JSON algebra container (keys dim, basis, gram, brackets with
/// scalar strings). Structural problems raise errc::parse_error with a
/// position, index problems (i >= j, out of range, duplicates) raise
/// errc::index_error. No validation happens here.
QuadraticLieAlgebra parse_algebra(std::string_view bytes);

/// Canonical emission: two-space indent, keys in the order dim, basis,
/// gram, brackets; bracket entries sorted by (i, j) with zero entries
/// dropped; scalars in canonical grammar; trailing newline. parse then
/// write is the identity on canonical bytes.
std::string write_algebra(const QuadraticLieAlgebra& g);

/// JSON matrix envelope { "dim": n, "entries": [[...]] } for derivation files.
Matrix parse_matrix(std::string_view bytes);
std::string write_matrix(const Matrix& m);

/// SplitMix64: the fixed PRNG behind every seeded fixture (see README for
/// the constants).
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// uniform value in [0, bound)
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
  std::uint64_t state_;
};

/// Random small-entry matrix S that is skew for the form of g, drawn
/// deterministically from the seed.
Matrix random_gram_skew(const QuadraticLieAlgebra& g, SplitMix64& rng);

/// Cayley transform (I - S)^-1 (I + S) of a gram-skew S; an exact isometry
/// of the form. Throws errc::singular_map when I - S is singular.
LinearMap cayley_isometry(const Matrix& gram, const Matrix& s);

/// Deterministic Cayley isometry (I - S)^-1 (I + S) of the form of g;
/// resamples S up to 16 times when I - S is singular, then throws
/// errc::resample_exhausted. Satisfies A^T gram A = gram exactly.
LinearMap random_isometry(const QuadraticLieAlgebra& g, std::uint64_t seed);

} // namespace qlie
