#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "nekbound/errors.hpp"
#include "nekbound/generate.hpp"
#include "nekbound/io.hpp"
#include "nekbound/rng.hpp"
#include "nekbound/rowsums.hpp"

using namespace nekbound;
using nekbound::test::rel_close;
using nekbound::test::rel_close_all;

TEST_CASE("nekrasov row sums collapse to upper sums for upper-triangular input") {
    const Matrix a{{2, -1, 3}, {0, 4, -5}, {0, 0, 6}};
    const std::vector<double> h = nekrasov_row_sums(a);
    CHECK(h == std::vector<double>{4.0, 5.0, 0.0});
}

TEST_CASE("nekrasov row sums of the identity vanish") {
    CHECK(nekrasov_row_sums(Matrix::identity(5)) == std::vector<double>(5, 0.0));
    CHECK(nekrasov_row_sums(Matrix{{5.0}}) == std::vector<double>{0.0});
}

TEST_CASE("nekrasov row sums of A5") {
    const std::vector<double> h = nekrasov_row_sums(builtin("A5").matrix);
    const double h1 = 5.0;
    const double h2 = 1.0 * (h1 / 6.0) + 8.0;
    const double h3 = 7.0 * (h1 / 6.0) + 3.0 * (h2 / 11.0);
    REQUIRE(h.size() == 3);
    CHECK(h[0] == doctest::Approx(h1).epsilon(1e-14));
    CHECK(h[1] == doctest::Approx(h2).epsilon(1e-14));
    CHECK(h[2] == doctest::Approx(h3).epsilon(1e-14));
}

TEST_CASE("zero diagonal entries are an error, with the offending index") {
    const Matrix a{{0, 1}, {1, 1}};
    CHECK_THROWS_AS(nekrasov_row_sums(a), ZeroDiagonalError);
    CHECK_THROWS_AS(z_weights(a), ZeroDiagonalError);
    CHECK_THROWS_AS(h_via_triangular_solve(a), ZeroDiagonalError);
    try {
        nekrasov_row_sums(Matrix{{1, 2}, {3, 0}});
    } catch (const ZeroDiagonalError& e) {
        CHECK(e.index() == 1);
    }
}

TEST_CASE("z weights are all ones without a strict lower part") {
    const Matrix a{{2, -1, 3}, {0, 4, -5}, {0, 0, 6}};
    CHECK(z_weights(a) == std::vector<double>{1.0, 1.0, 1.0});
    CHECK(z_weights(Matrix{{5.0}}) == std::vector<double>{1.0});
}

TEST_CASE("z weights of A5") {
    const std::vector<double> z = z_weights(builtin("A5").matrix);
    REQUIRE(z.size() == 3);
    CHECK(z[0] == 1.0);
    CHECK(z[1] == doctest::Approx(1.0 / 6.0 + 1.0).epsilon(1e-14));
    CHECK(z[2] == doctest::Approx(7.0 / 6.0 + (3.0 / 11.0) * (1.0 / 6.0 + 1.0) + 1.0)
                      .epsilon(1e-14));
}

TEST_CASE("triangular-solve h: identity and A5") {
    CHECK(h_via_triangular_solve(Matrix::identity(4)) == std::vector<double>(4, 0.0));
    CHECK(rel_close_all(h_via_triangular_solve(builtin("A5").matrix),
                        nekrasov_row_sums(builtin("A5").matrix), 1e-12));
}

TEST_CASE("recursion and triangular solve agree on random matrices") {
    SplitMix64 rng(51);
    int checked = 0;
    for (int trial = 0; trial < 220; ++trial) {
        const std::size_t n = 1 + rng.next_u64() % 12;
        const Scalars kind = (trial % 2 == 0) ? Scalars::real : Scalars::complex_entries;
        const Matrix a = random_nonzero_diagonal(rng, n, kind);
        CHECK(rel_close_all(nekrasov_row_sums(a), h_via_triangular_solve(a), 1e-10));
        ++checked;
    }
    CHECK(checked >= 200);
}

TEST_CASE("z equals |a_ii| times the solution of (|D|-|L|) y = e") {
    SplitMix64 rng(52);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng.next_u64() % 12;
        const Scalars kind = (trial % 2 == 0) ? Scalars::real : Scalars::complex_entries;
        const Matrix a = random_nonzero_diagonal(rng, n, kind);
        // independent forward substitution against the all-ones vector
        std::vector<double> y(n);
        for (std::size_t i = 0; i < n; ++i) {
            double s = 1.0;
            for (std::size_t j = 0; j < i; ++j) s += std::abs(a(i, j)) * y[j];
            y[i] = s / std::abs(a(i, i));
        }
        const std::vector<double> z = z_weights(a);
        for (std::size_t i = 0; i < n; ++i)
            CHECK(rel_close(z[i], std::abs(a(i, i)) * y[i], 1e-12));
    }
}

TEST_CASE("h is monotone in the off-diagonal moduli") {
    SplitMix64 rng(53);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + rng.next_u64() % 10;
        const Matrix a = random_nonzero_diagonal(rng, n, Scalars::real);
        const double t = rng.next_double();  // [0, 1)
        Matrix scaled = a;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) scaled(i, j) *= t;
        const std::vector<double> h = nekrasov_row_sums(a);
        const std::vector<double> ht = nekrasov_row_sums(scaled);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(ht[i] >= 0.0);
            CHECK(ht[i] <= h[i] * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("z weights never drop below one") {
    SplitMix64 rng(54);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng.next_u64() % 12;
        const Matrix a = random_nonzero_diagonal(rng, n, Scalars::complex_entries);
        for (const double zi : z_weights(a)) CHECK(zi >= 1.0);
    }
}

TEST_CASE("row_sums bundles h, z, and the source digest") {
    const Matrix a = builtin("A2").matrix;
    const RowSums rs = row_sums(a);
    CHECK(rs.h == nekrasov_row_sums(a));
    CHECK(rs.z == z_weights(a));
    CHECK(rs.source_digest == matrix_digest(a));
    CHECK(rs.h[0] == deleted_row_sums(a)[0]);  // h_1 is the plain first-row sum
}
