#pragma once

#include <cstddef>

#include "nekbound/matrix.hpp"
#include "nekbound/rng.hpp"

namespace nekbound {

enum class Scalars { real, complex_entries };

/// Unstructured matrix, every component uniform in [-1, 1].
Matrix random_matrix(SplitMix64& rng, std::size_t n, Scalars kind);

/// Like random_matrix but with diagonal moduli in [0.2, 2.2], so the h/z
/// recursions are well defined and numerically tame.
Matrix random_nonzero_diagonal(SplitMix64& rng, std::size_t n, Scalars kind);

/// Nekrasov by construction: off-diagonal components uniform in [-1, 1],
/// then diagonals in index order with |a_ii| = h_i + delta, delta in (0, 2].
/// Draw order per row i: off-diagonal entries left to right, then delta,
/// then the diagonal sign (real) or phase (complex).
Matrix random_nekrasov(SplitMix64& rng, std::size_t n, Scalars kind);

/// SDD by construction: |a_ii| = r_i + delta, delta in (0, 2].
Matrix random_sdd(SplitMix64& rng, std::size_t n, Scalars kind);

}  // namespace nekbound
