#include "nekbound/matrix.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>

namespace nekbound {

Matrix::Matrix(std::size_t n) : n_(n), data_(n * n) {
    if (n == 0) throw std::invalid_argument("matrix order must be at least 1");
}

Matrix::Matrix(std::size_t n, std::vector<Complex> entries) : n_(n), data_(std::move(entries)) {
    if (n == 0) throw std::invalid_argument("matrix order must be at least 1");
    if (data_.size() != n * n)
        throw std::invalid_argument("entry count does not match matrix order");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : n_(rows.size()), data_() {
    if (n_ == 0) throw std::invalid_argument("matrix order must be at least 1");
    data_.reserve(n_ * n_);
    for (const auto& row : rows) {
        if (row.size() != n_) throw std::invalid_argument("matrix rows must all have length n");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

bool Matrix::all_finite() const {
    for (const Complex& v : data_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

Splitting split(const Matrix& a) {
    const std::size_t n = a.order();
    Splitting s{std::vector<Complex>(n), Matrix(n), Matrix(n)};
    for (std::size_t i = 0; i < n; ++i) {
        s.diagonal[i] = a(i, i);
        for (std::size_t j = 0; j < i; ++j) s.lower(i, j) = -a(i, j);
        for (std::size_t j = i + 1; j < n; ++j) s.upper(i, j) = -a(i, j);
    }
    return s;
}

Matrix comparison_matrix(const Matrix& a) {
    const std::size_t n = a.order();
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = (i == j) ? std::abs(a(i, j)) : -std::abs(a(i, j));
    return m;
}

std::vector<double> deleted_row_sums(const Matrix& a) {
    const std::size_t n = a.order();
    std::vector<double> r(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) r[i] += std::abs(a(i, j));
    return r;
}

double infinity_norm(const Matrix& a) {
    const std::size_t n = a.order();
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < n; ++j) row += std::abs(a(i, j));
        best = std::max(best, row);
    }
    return best;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    const std::size_t n = a.order();
    if (b.order() != n) throw std::invalid_argument("order mismatch in multiply");
    Matrix c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

Matrix permute_symmetric(const Matrix& a, std::span<const std::size_t> perm) {
    const std::size_t n = a.order();
    if (perm.size() != n) throw std::invalid_argument("permutation length must equal order");
    Matrix b(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b(i, j) = a(perm[i], perm[j]);
    return b;
}

std::uint64_t matrix_digest(const Matrix& a) {
    std::uint64_t hash = 0xcbf29ce484222325ull;
    auto mix = [&hash](const void* p, std::size_t len) {
        const auto* bytes = static_cast<const unsigned char*>(p);
        for (std::size_t i = 0; i < len; ++i) {
            hash ^= bytes[i];
            hash *= 0x100000001b3ull;
        }
    };
    const std::uint64_t n = a.order();
    mix(&n, sizeof n);
    for (const Complex& v : a.entries()) {
        const double re = v.real(), im = v.imag();
        mix(&re, sizeof re);
        mix(&im, sizeof im);
    }
    return hash;
}

}  // namespace nekbound
