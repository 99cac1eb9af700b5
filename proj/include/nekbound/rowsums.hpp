#pragma once

#include <cstdint>
#include <vector>

#include "nekbound/matrix.hpp"

namespace nekbound {

/// The two recursive per-row quantities the bounds are built from, tied to
/// the matrix they came from by its digest.
struct RowSums {
    std::vector<double> h;
    std::vector<double> z;
    std::uint64_t source_digest;
};

/// Nekrasov row sums, computed in index order:
///   h_1 = sum_{j>1} |a_1j|
///   h_i = sum_{j<i} |a_ij| * h_j/|a_jj|  +  sum_{j>i} |a_ij|
/// Throws ZeroDiagonalError if any |a_ii| = 0.
std::vector<double> nekrasov_row_sums(const Matrix& a);

/// Weights z_1 = 1, z_i = sum_{j<i} (|a_ij|/|a_jj|) z_j + 1.
/// Throws ZeroDiagonalError if any |a_ii| = 0.
std::vector<double> z_weights(const Matrix& a);

/// Independent route to the same h vector: |a_ii| * [(|D|-|L|)^-1 |U| e]_i
/// via one forward substitution. Used to cross-validate the recursion.
std::vector<double> h_via_triangular_solve(const Matrix& a);

RowSums row_sums(const Matrix& a);

}  // namespace nekbound
