#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "nekbound/matrix.hpp"

namespace nekbound::test {

// |a - b| <= tol * max(|a|, |b|); exact zeros compare equal.
inline bool rel_close(double a, double b, double tol) {
    const double diff = std::abs(a - b);
    return diff <= tol * std::max(std::abs(a), std::abs(b));
}

inline bool rel_close_all(const std::vector<double>& a, const std::vector<double>& b,
                          double tol) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!rel_close(a[i], b[i], tol)) return false;
    return true;
}

// max_ij |a_ij - b_ij|
inline double max_entry_diff(const Matrix& a, const Matrix& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.order(); ++i)
        for (std::size_t j = 0; j < a.order(); ++j)
            worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
    return worst;
}

// ||A * Ainv - I||_inf
inline double residual_identity(const Matrix& a, const Matrix& ainv) {
    Matrix p = multiply(a, ainv);
    for (std::size_t i = 0; i < p.order(); ++i) p(i, i) -= 1.0;
    return infinity_norm(p);
}

}  // namespace nekbound::test
