#include "nekbound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nekbound/classify.hpp"
#include "nekbound/errors.hpp"
#include "nekbound/rowsums.hpp"

namespace nekbound {

double varah_bound(const Matrix& a) {
    const SddVerdict v = classify_sdd(a);
    if (!v.is_sdd) throw NotSddError();
    return 1.0 / *std::min_element(v.margins.begin(), v.margins.end());
}

double nekrasov_bound_2(const Matrix& a) {
    if (!classify_nekrasov(a).is_nekrasov) throw NotNekrasovError();
    const std::vector<double> h = nekrasov_row_sums(a);
    const std::vector<double> z = z_weights(a);
    const std::size_t n = a.order();
    double max_z_ratio = 0.0, max_h_ratio = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = std::abs(a(i, i));
        max_z_ratio = std::max(max_z_ratio, z[i] / d);
        max_h_ratio = std::max(max_h_ratio, h[i] / d);
    }
    return max_z_ratio / (1.0 - max_h_ratio);
}

double nekrasov_bound_3(const Matrix& a) {
    if (!classify_nekrasov(a).is_nekrasov) throw NotNekrasovError();
    const std::vector<double> h = nekrasov_row_sums(a);
    const std::vector<double> z = z_weights(a);
    const std::size_t n = a.order();
    double max_z = 0.0;
    double min_margin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        max_z = std::max(max_z, z[i]);
        min_margin = std::min(min_margin, std::abs(a(i, i)) - h[i]);
    }
    return max_z / min_margin;
}

BoundReport best_bound(const Matrix& a) {
    BoundReport r;
    if (classify_sdd(a).is_sdd) r.varah = varah_bound(a);
    if (classify_nekrasov(a).is_nekrasov) {
        r.bound2 = nekrasov_bound_2(a);
        r.bound3 = nekrasov_bound_3(a);
    }
    for (const auto& b : {r.varah, r.bound2, r.bound3})
        if (b && (!r.best || *b < *r.best)) r.best = *b;
    return r;
}

}  // namespace nekbound
