#include "nekbound/generate.hpp"

#include <cmath>
#include <numbers>

namespace nekbound {

namespace {

Complex draw_entry(SplitMix64& rng, Scalars kind) {
    const double re = rng.next_in(-1.0, 1.0);
    if (kind == Scalars::real) return Complex{re, 0.0};
    return Complex{re, rng.next_in(-1.0, 1.0)};
}

// Diagonal entry of the requested modulus: random sign when real,
// random phase when complex.
Complex draw_diagonal(SplitMix64& rng, Scalars kind, double modulus) {
    if (kind == Scalars::real) {
        const bool negative = rng.next_u64() & 1u;
        return Complex{negative ? -modulus : modulus, 0.0};
    }
    const double theta = rng.next_in(0.0, 2.0 * std::numbers::pi);
    return Complex{modulus * std::cos(theta), modulus * std::sin(theta)};
}

// delta in (0, 2].
double draw_delta(SplitMix64& rng) { return 2.0 - 2.0 * rng.next_double(); }

// Shared skeleton: fill off-diagonals row by row, then pick the diagonal
// modulus from the row quantity the class definition dominates.
template <typename RowTarget>
Matrix generate_dominant(SplitMix64& rng, std::size_t n, Scalars kind, RowTarget target) {
    Matrix a(n);
    std::vector<double> scaled_h(n, 0.0);  // h_j / |a_jj| for rows already fixed
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) a(i, j) = draw_entry(rng, kind);
        double h = 0.0, r = 0.0;
        for (std::size_t j = 0; j < i; ++j) {
            const double m = std::abs(a(i, j));
            h += m * scaled_h[j];
            r += m;
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            const double m = std::abs(a(i, j));
            h += m;
            r += m;
        }
        const double modulus = target(h, r) + draw_delta(rng);
        a(i, i) = draw_diagonal(rng, kind, modulus);
        scaled_h[i] = h / modulus;
    }
    return a;
}

}  // namespace

Matrix random_matrix(SplitMix64& rng, std::size_t n, Scalars kind) {
    Matrix a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = draw_entry(rng, kind);
    return a;
}

Matrix random_nonzero_diagonal(SplitMix64& rng, std::size_t n, Scalars kind) {
    Matrix a = random_matrix(rng, n, kind);
    for (std::size_t i = 0; i < n; ++i)
        a(i, i) = draw_diagonal(rng, kind, rng.next_in(0.2, 2.2));
    return a;
}

Matrix random_nekrasov(SplitMix64& rng, std::size_t n, Scalars kind) {
    return generate_dominant(rng, n, kind, [](double h, double) { return h; });
}

Matrix random_sdd(SplitMix64& rng, std::size_t n, Scalars kind) {
    return generate_dominant(rng, n, kind, [](double, double r) { return r; });
}

}  // namespace nekbound
