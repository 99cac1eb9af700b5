#pragma once

#include <cstddef>
#include <vector>

#include "nekbound/matrix.hpp"

namespace nekbound {

/// PA = LU with partial pivoting, L unit lower and U upper packed into one
/// array. pivots[k] is the row swapped into position k at elimination step k.
struct LuFactors {
    Matrix lu;
    std::vector<std::size_t> pivots;
    int sign;            // determinant sign of the row permutation
    bool singular;       // some |u_kk| <= singular_tol
    double singular_tol; // n * eps * max_k |u_kk|

    /// Permutation p with (PA) row i = A row p[i].
    std::vector<std::size_t> permutation() const;
};

/// Never throws; rank-deficient inputs come back flagged singular.
LuFactors lu_factor(const Matrix& a);

/// Solve A x = b from the factorization. Throws SingularError when flagged.
std::vector<Complex> lu_solve(const LuFactors& f, std::vector<Complex> b);

/// Full inverse, one unit-vector solve per column. Throws SingularError.
Matrix inverse_entrywise(const Matrix& a);

/// Exact ||A^-1||_inf: max absolute row sum of the full inverse.
double exact_inverse_inf_norm(const Matrix& a);

}  // namespace nekbound
