#include "nekbound/classify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "nekbound/errors.hpp"
#include "nekbound/lu.hpp"
#include "nekbound/rowsums.hpp"

namespace nekbound {

SddVerdict classify_sdd(const Matrix& a) {
    const std::size_t n = a.order();
    const std::vector<double> r = deleted_row_sums(a);
    SddVerdict v{true, std::vector<double>(n)};
    for (std::size_t i = 0; i < n; ++i) {
        v.margins[i] = std::abs(a(i, i)) - r[i];
        if (!(v.margins[i] > 0.0)) v.is_sdd = false;
    }
    return v;
}

NekrasovVerdict classify_nekrasov(const Matrix& a) {
    const std::size_t n = a.order();
    std::vector<double> h;
    try {
        h = nekrasov_row_sums(a);
    } catch (const ZeroDiagonalError&) {
        return NekrasovVerdict{false, std::nullopt};
    }
    NekrasovVerdict v{true, std::vector<double>(n)};
    for (std::size_t i = 0; i < n; ++i) {
        (*v.margins)[i] = std::abs(a(i, i)) - h[i];
        if (!((*v.margins)[i] > 0.0)) v.is_nekrasov = false;
    }
    return v;
}

bool classify_nekrasov_szulc(const Matrix& a) {
    const std::size_t n = a.order();
    std::vector<double> d(n);
    for (std::size_t i = 0; i < n; ++i) {
        d[i] = std::abs(a(i, i));
        if (d[i] == 0.0) throw ZeroDiagonalError(i);
    }

    // Column j of (|D|-|L|)^-1 |U| by forward substitution.
    Matrix c = Matrix::identity(n);
    std::vector<double> x(n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            double s = (j > i) ? std::abs(a(i, j)) : 0.0;
            for (std::size_t k = 0; k < i; ++k) s += std::abs(a(i, k)) * x[k];
            x[i] = s / d[i];
        }
        for (std::size_t i = 0; i < n; ++i) c(i, j) -= x[i];
    }

    // The equivalence needs the diagonal of C positive: c_ii <= 0 means row i
    // already has [(|D|-|L|)^-1 |U|]_ii >= 1, which the |c_ii| test would mask.
    if (!classify_sdd(c).is_sdd) return false;
    for (std::size_t i = 0; i < n; ++i)
        if (!(c(i, i).real() > 0.0)) return false;
    return true;
}

bool classify_h_matrix(const Matrix& a) {
    try {
        const Matrix inv = inverse_entrywise(comparison_matrix(a));
        const double tol = 1e-10 * infinity_norm(inv);  // roundoff guard only
        const std::size_t n = inv.order();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (inv(i, j).real() < -tol) return false;
        return true;
    } catch (const SingularError&) {
        return false;
    }
}

namespace {

struct GudkovDfs {
    const Matrix& a;
    std::vector<double> r;               // full deleted row sums
    std::vector<std::size_t> prefix;     // chosen original indices, in order
    std::vector<double> scaled_h;        // h_t of the permuted prefix / diagonal modulus
    std::vector<bool> used;
    std::uint64_t budget;
    bool truncated = false;

    bool search() {
        const std::size_t n = a.order();
        const std::size_t depth = prefix.size();
        if (depth == n) return true;
        for (std::size_t q = 0; q < n; ++q) {
            if (used[q]) continue;
            if (budget == 0) {
                truncated = true;
                return false;
            }
            --budget;
            // Nekrasov row sum of position `depth` if q comes next: lower
            // terms run over the prefix, upper terms over the unused rest.
            double lower = 0.0, used_sum = 0.0;
            for (std::size_t t = 0; t < depth; ++t) {
                const double m = std::abs(a(q, prefix[t]));
                lower += m * scaled_h[t];
                used_sum += m;
            }
            const double hq = lower + (r[q] - used_sum);
            const double dq = std::abs(a(q, q));
            if (!(dq > hq)) continue;
            prefix.push_back(q);
            scaled_h.push_back(hq / dq);
            used[q] = true;
            if (search()) return true;
            used[q] = false;
            scaled_h.pop_back();
            prefix.pop_back();
            if (truncated) return false;
        }
        return false;
    }
};

std::uint64_t saturating_budget(std::size_t limit, std::size_t n) {
    std::uint64_t b = limit;
    for (std::size_t k = 2; k <= n; ++k) {
        if (b > std::numeric_limits<std::uint64_t>::max() / k)
            return std::numeric_limits<std::uint64_t>::max();
        b *= k;
    }
    return b;
}

}  // namespace

GudkovSearch find_gudkov_permutation(const Matrix& a, std::size_t exhaustive_limit) {
    const std::size_t n = a.order();
    std::vector<std::size_t> identity(n);
    std::iota(identity.begin(), identity.end(), std::size_t{0});

    if (classify_nekrasov(a).is_nekrasov) return GudkovSearch{identity, true};

    if (n <= exhaustive_limit) {
        std::vector<std::size_t> p = identity;
        while (std::next_permutation(p.begin(), p.end())) {
            if (classify_nekrasov(permute_symmetric(a, p)).is_nekrasov)
                return GudkovSearch{p, true};
        }
        return GudkovSearch{std::nullopt, true};
    }

    GudkovDfs dfs{a, deleted_row_sums(a), {}, {}, std::vector<bool>(n, false),
                  saturating_budget(exhaustive_limit, n)};
    if (dfs.search()) return GudkovSearch{dfs.prefix, !dfs.truncated};
    return GudkovSearch{std::nullopt, !dfs.truncated};
}

Classification classify_basic(const Matrix& a) {
    const SddVerdict sdd = classify_sdd(a);
    const NekrasovVerdict nek = classify_nekrasov(a);
    Classification c;
    c.is_sdd = sdd.is_sdd;
    // The report keeps the inclusion chain SDD <= Nekrasov <= H by construction.
    c.is_nekrasov = nek.is_nekrasov || c.is_sdd;
    c.is_h_matrix = classify_h_matrix(a) || c.is_nekrasov;
    c.gudkov_permutation = std::nullopt;
    c.gudkov_exhaustive = false;
    c.sdd_margins = sdd.margins;
    c.nekrasov_margins = nek.margins;
    return c;
}

Classification classify_all(const Matrix& a, std::size_t gudkov_limit) {
    Classification c = classify_basic(a);
    const GudkovSearch gudkov = find_gudkov_permutation(a, gudkov_limit);
    c.gudkov_permutation = gudkov.permutation;
    c.gudkov_exhaustive = gudkov.exhaustive;
    return c;
}

}  // namespace nekbound
