#include "nekbound/lu.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <utility>

#include "nekbound/errors.hpp"

namespace nekbound {

std::vector<std::size_t> LuFactors::permutation() const {
    std::vector<std::size_t> p(pivots.size());
    std::iota(p.begin(), p.end(), std::size_t{0});
    for (std::size_t k = 0; k < pivots.size(); ++k) std::swap(p[k], p[pivots[k]]);
    return p;
}

LuFactors lu_factor(const Matrix& a) {
    const std::size_t n = a.order();
    Matrix lu = a;
    std::vector<std::size_t> pivots(n);
    int sign = 1;

    for (std::size_t k = 0; k < n; ++k) {
        // Largest modulus in column k, rows k..n-1.
        std::size_t p = k;
        double best = std::abs(lu(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double v = std::abs(lu(i, k));
            if (v > best) {
                best = v;
                p = i;
            }
        }
        pivots[k] = p;
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(p, j));
            sign = -sign;
        }
        // A zero pivot means the whole column below is zero; nothing to do.
        if (lu(k, k) == Complex{}) continue;
        for (std::size_t i = k + 1; i < n; ++i) {
            lu(i, k) /= lu(k, k);
            const Complex m = lu(i, k);
            if (m == Complex{}) continue;
            for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= m * lu(k, j);
        }
    }

    double umax = 0.0;
    for (std::size_t k = 0; k < n; ++k) umax = std::max(umax, std::abs(lu(k, k)));
    const double tol = static_cast<double>(n) * std::numeric_limits<double>::epsilon() * umax;
    bool singular = false;
    for (std::size_t k = 0; k < n; ++k)
        if (std::abs(lu(k, k)) <= tol) singular = true;

    return LuFactors{std::move(lu), std::move(pivots), sign, singular, tol};
}

std::vector<Complex> lu_solve(const LuFactors& f, std::vector<Complex> b) {
    if (f.singular) throw SingularError();
    const std::size_t n = f.lu.order();
    for (std::size_t k = 0; k < n; ++k) std::swap(b[k], b[f.pivots[k]]);
    // Ly = Pb, unit lower.
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) b[i] -= f.lu(i, j) * b[j];
    // Ux = y.
    for (std::size_t ii = n; ii-- > 0;) {
        for (std::size_t j = ii + 1; j < n; ++j) b[ii] -= f.lu(ii, j) * b[j];
        b[ii] /= f.lu(ii, ii);
    }
    return b;
}

Matrix inverse_entrywise(const Matrix& a) {
    const std::size_t n = a.order();
    const LuFactors f = lu_factor(a);
    if (f.singular) throw SingularError();
    Matrix inv(n);
    std::vector<Complex> e(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::fill(e.begin(), e.end(), Complex{});
        e[j] = 1.0;
        const std::vector<Complex> x = lu_solve(f, e);
        for (std::size_t i = 0; i < n; ++i) inv(i, j) = x[i];
    }
    return inv;
}

double exact_inverse_inf_norm(const Matrix& a) {
    return infinity_norm(inverse_entrywise(a));
}

}  // namespace nekbound
