#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nekbound/matrix.hpp"

namespace nekbound {

inline constexpr std::size_t kDefaultGudkovLimit = 8;

struct SddVerdict {
    bool is_sdd;
    std::vector<double> margins;  // |a_ii| - r_i, returned for every verdict
};

struct NekrasovVerdict {
    bool is_nekrasov;
    std::optional<std::vector<double>> margins;  // |a_ii| - h_i; absent on a zero diagonal
};

struct GudkovSearch {
    std::optional<std::vector<std::size_t>> permutation;
    // True when an absent result proves non-membership (the search ran to
    // completion rather than hitting its node budget).
    bool exhaustive;
};

struct Classification {
    bool is_sdd;
    bool is_nekrasov;
    bool is_h_matrix;
    std::optional<std::vector<std::size_t>> gudkov_permutation;
    bool gudkov_exhaustive;
    std::vector<double> sdd_margins;
    std::optional<std::vector<double>> nekrasov_margins;
};

/// Strict comparison |a_ii| > r_i(A) on every row, no tolerance.
SddVerdict classify_sdd(const Matrix& a);

/// Strict comparison |a_ii| > h_i(A); a zero diagonal yields a false verdict
/// with the margins absent. For n = 1 this reduces to |a_11| > 0.
NekrasovVerdict classify_nekrasov(const Matrix& a);

/// Szulc characterization: builds C = E - (|D|-|L|)^-1 |U| by forward solves
/// against the columns of |U| and tests it for strict diagonal dominance.
/// Must agree with classify_nekrasov. Throws ZeroDiagonalError.
bool classify_nekrasov_szulc(const Matrix& a);

/// True iff the comparison matrix is a nonsingular M-matrix, i.e. <A>^-1
/// is entrywise nonnegative up to a roundoff guard of 1e-10 * ||<A>^-1||_inf.
bool classify_h_matrix(const Matrix& a);

/// Search for a permutation p making permute_symmetric(a, p) a Nekrasov
/// matrix. Exhaustive over all n! orderings when n <= exhaustive_limit;
/// beyond that a depth-first search seeded at strictly dominant rows,
/// extending by the position-wise Nekrasov condition with backtracking,
/// capped at exhaustive_limit * n! node expansions.
GudkovSearch find_gudkov_permutation(const Matrix& a,
                                     std::size_t exhaustive_limit = kDefaultGudkovLimit);

/// SDD / Nekrasov / H verdicts and margins, no Gudkov search.
Classification classify_basic(const Matrix& a);

Classification classify_all(const Matrix& a,
                            std::size_t gudkov_limit = kDefaultGudkovLimit);

}  // namespace nekbound
