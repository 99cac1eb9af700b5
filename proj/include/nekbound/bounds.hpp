#pragma once

#include <optional>

#include "nekbound/matrix.hpp"

namespace nekbound {

/// Upper bounds on ||A^-1||_inf. A bound is present only when its class
/// precondition holds; best is the minimum of the present bounds; exact is
/// filled from the dense oracle on request.
struct BoundReport {
    std::optional<double> varah;
    std::optional<double> bound2;
    std::optional<double> bound3;
    std::optional<double> best;
    std::optional<double> exact;
};

/// Varah: 1 / min_i (|a_ii| - r_i). Throws NotSddError.
double varah_bound(const Matrix& a);

/// (max_i z_i/|a_ii|) / (1 - max_i h_i/|a_ii|). Throws NotNekrasovError.
double nekrasov_bound_2(const Matrix& a);

/// (max_i z_i) / (min_i (|a_ii| - h_i)). Throws NotNekrasovError.
double nekrasov_bound_3(const Matrix& a);

/// Every applicable bound; no bound fields when the matrix is neither SDD
/// nor Nekrasov. Row sums are recomputed internally, never caller-supplied.
BoundReport best_bound(const Matrix& a);

}  // namespace nekbound
