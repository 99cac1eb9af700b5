#include "nekbound/rowsums.hpp"

#include <cmath>

#include "nekbound/errors.hpp"

namespace nekbound {

namespace {

// Moduli of the diagonal; throws on the first exact zero.
std::vector<double> diagonal_moduli(const Matrix& a) {
    const std::size_t n = a.order();
    std::vector<double> d(n);
    for (std::size_t i = 0; i < n; ++i) {
        d[i] = std::abs(a(i, i));
        if (d[i] == 0.0) throw ZeroDiagonalError(i);
    }
    return d;
}

}  // namespace

std::vector<double> nekrasov_row_sums(const Matrix& a) {
    const std::size_t n = a.order();
    const std::vector<double> d = diagonal_moduli(a);
    std::vector<double> h(n, 0.0);
    std::vector<double> scaled(n, 0.0);  // h_j / |a_jj|, divided once per j
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < i; ++j) s += std::abs(a(i, j)) * scaled[j];
        for (std::size_t j = i + 1; j < n; ++j) s += std::abs(a(i, j));
        h[i] = s;
        scaled[i] = h[i] / d[i];
    }
    return h;
}

std::vector<double> z_weights(const Matrix& a) {
    const std::size_t n = a.order();
    const std::vector<double> d = diagonal_moduli(a);
    std::vector<double> z(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double s = 1.0;
        for (std::size_t j = 0; j < i; ++j) s += (std::abs(a(i, j)) / d[j]) * z[j];
        z[i] = s;
    }
    return z;
}

std::vector<double> h_via_triangular_solve(const Matrix& a) {
    const std::size_t n = a.order();
    const std::vector<double> d = diagonal_moduli(a);
    // w = |U| e, the absolute strict-upper row sums.
    std::vector<double> w(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) w[i] += std::abs(a(i, j));
    // Forward substitution with the lower-triangular M-matrix |D| - |L|.
    std::vector<double> y(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double s = w[i];
        for (std::size_t j = 0; j < i; ++j) s += std::abs(a(i, j)) * y[j];
        y[i] = s / d[i];
    }
    std::vector<double> h(n);
    for (std::size_t i = 0; i < n; ++i) h[i] = d[i] * y[i];
    return h;
}

RowSums row_sums(const Matrix& a) {
    return RowSums{nekrasov_row_sums(a), z_weights(a), matrix_digest(a)};
}

}  // namespace nekbound
