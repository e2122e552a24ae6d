#pragma once

// Deterministic random fixtures shared by the unit and acceptance suites.

#include <random>

#include "khicalc/filtered.hpp"
#include "khicalc/knot.hpp"

namespace fixtures {

using khicalc::Field;
using khicalc::FilteredComplex;
using khicalc::Matrix;

// Random filtered chain complex over the field: a canonical square-zero
// pairing differential conjugated by a random filtration-preserving change
// of basis. Levels may only rise along the differential, so the result is a
// valid filtered complex with known homology dimension n - 2 * pairs.
inline FilteredComplex random_filtered_complex(std::mt19937_64& rng, Field f,
                                               std::size_t max_dim = 12, int max_levels = 5)
{
    std::uniform_int_distribution<std::size_t> dim_dist(1, max_dim);
    std::size_t n = dim_dist(rng);
    std::uniform_int_distribution<int> level_dist(0, max_levels - 1);
    std::vector<int> levels(n);
    for (auto& l : levels)
        l = level_dist(rng);

    // partial matching a -> b with level[b] >= level[a]
    Matrix d0(f, n, n);
    std::vector<bool> used(n, false);
    std::uniform_int_distribution<std::size_t> idx_dist(0, n - 1);
    std::uniform_int_distribution<int> coin(0, 3);
    for (std::size_t attempt = 0; attempt < n; ++attempt) {
        std::size_t a = idx_dist(rng), b = idx_dist(rng);
        if (a == b || used[a] || used[b] || levels[b] < levels[a] || coin(rng) == 0)
            continue;
        d0.at(b, a) = f.one();
        used[a] = used[b] = true;
    }

    // g = (I + strictly-level-raising nilpotent) * (level-preserving shears)
    Matrix g = Matrix::identity(f, n);
    std::uniform_int_distribution<long> entry(-2, 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (levels[i] > levels[j])
                g.at(i, j) = f.integer(entry(rng));
    for (std::size_t shear = 0; shear < 2 * n; ++shear) {
        std::size_t a = idx_dist(rng), b = idx_dist(rng);
        if (a == b || levels[a] != levels[b])
            continue;
        Matrix e = Matrix::identity(f, n);
        e.at(a, b) = f.integer(entry(rng));
        g = g * e;
    }
    auto ginv = g.solve(Matrix::identity(f, n));
    if (!ginv)
        throw std::logic_error("random_filtered_complex: change of basis not invertible");
    return FilteredComplex(g * d0 * *ginv, std::move(levels));
}

// Random coherent coefficient pattern with strictly increasing gaps,
// n_k <= max_top. The empty pattern (k = 0) is allowed.
inline khicalc::LspaceForm random_lspace_form(std::mt19937_64& rng, int max_top = 12)
{
    std::uniform_int_distribution<int> top_dist(0, max_top);
    int top = top_dist(rng);
    khicalc::LspaceForm form;
    std::vector<int> gaps;
    int cur = top;
    std::uniform_int_distribution<int> step(1, 3);
    while (cur > 0) {
        gaps.push_back(cur);
        cur -= step(rng);
    }
    gaps.push_back(0);
    form.k = static_cast<int>(gaps.size()) - 1;
    form.gaps = std::move(gaps);
    return form;
}

inline Matrix random_matrix(std::mt19937_64& rng, Field f, std::size_t rows, std::size_t cols,
                            long lo = -3, long hi = 3)
{
    std::uniform_int_distribution<long> entry(lo, hi);
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = f.integer(entry(rng));
    return m;
}

} // namespace fixtures
