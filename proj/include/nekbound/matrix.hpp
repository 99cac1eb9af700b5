#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace nekbound {

using Complex = std::complex<double>;

/// Dense square matrix over the complex doubles, row-major storage.
class Matrix {
public:
    /// n-by-n zero matrix, n >= 1.
    explicit Matrix(std::size_t n);

    /// Row-major entries; entries.size() must equal n*n.
    Matrix(std::size_t n, std::vector<Complex> entries);

    /// Row-wise construction, mostly for tests: Matrix{{6,-3},{1,2}}.
    Matrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static Matrix identity(std::size_t n);

    std::size_t order() const { return n_; }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    std::span<const Complex> entries() const { return data_; }

    /// True when no entry has a NaN or infinite component.
    bool all_finite() const;

    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t n_;
    std::vector<Complex> data_;
};

/// Standard splitting A = D - L - U: diagonal, strict lower, strict upper.
/// The sign convention means l(i,j) = -a(i,j) below and u(i,j) = -a(i,j)
/// above the diagonal.
struct Splitting {
    std::vector<Complex> diagonal;
    Matrix lower;
    Matrix upper;
};

Splitting split(const Matrix& a);

/// Comparison matrix: |a_ii| on the diagonal, -|a_ij| off it. Real-valued.
Matrix comparison_matrix(const Matrix& a);

/// Deleted row sums r_i = sum_{j != i} |a_ij|.
std::vector<double> deleted_row_sums(const Matrix& a);

/// Max absolute row sum.
double infinity_norm(const Matrix& a);

Matrix multiply(const Matrix& a, const Matrix& b);

/// Symmetric permutation: result(i,j) = a(perm[i], perm[j]).
Matrix permute_symmetric(const Matrix& a, std::span<const std::size_t> perm);

/// FNV-1a over the raw entry bytes; identifies which matrix a derived
/// vector was computed from.
std::uint64_t matrix_digest(const Matrix& a);

}  // namespace nekbound
