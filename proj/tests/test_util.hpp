#pragma once

#include "wenum/quadrat.hpp"
#include "wenum/transform.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace wenum::testutil {

// Reference route for the transform tests: K^[m] materialized as a full
// 2^m x 2^m matrix by repeated Kronecker products (independent of the
// butterfly implementation). Row-major, entry(i, j) = matrix[i * dim + j].
inline std::vector<QuadRat> materialized_k_power(int m) {
    std::vector<QuadRat> mat{QuadRat(1)}; // K^[0] = (1)
    size_t dim = 1;
    const QuadRat half_sqrt2 = QuadRat(Rational(0), Rational(1, 2)); // sqrt(2)/2
    const QuadRat k[2][2] = {{half_sqrt2, half_sqrt2}, {half_sqrt2, -half_sqrt2}};
    for (int s = 0; s < m; ++s) {
        size_t next = dim * 2;
        std::vector<QuadRat> out(next * next, QuadRat(0));
        for (size_t i = 0; i < next; ++i)
            for (size_t j = 0; j < next; ++j)
                out[i * next + j] = k[i / dim][j / dim] * mat[(i % dim) * dim + (j % dim)];
        mat = std::move(out);
        dim = next;
    }
    return mat;
}

inline SpectralVector multiply_row_by_matrix(const SpectralVector& v,
                                             const std::vector<QuadRat>& mat) {
    size_t dim = v.entries.size();
    std::vector<QuadRat> out(dim, QuadRat(0));
    for (size_t j = 0; j < dim; ++j)
        for (size_t i = 0; i < dim; ++i) out[j] += v.entries[i] * mat[i * dim + j];
    return SpectralVector(v.m, std::move(out));
}

// Exact rank of a list of vectors over Q(sqrt 2) by Gaussian elimination.
inline size_t exact_rank(std::vector<std::vector<QuadRat>> rows) {
    size_t rank = 0;
    size_t cols = rows.empty() ? 0 : rows[0].size();
    for (size_t col = 0; col < cols && rank < rows.size(); ++col) {
        size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            QuadRat factor = rows[r][col] / rows[rank][col];
            for (size_t c2 = col; c2 < cols; ++c2)
                rows[r][c2] -= factor * rows[rank][c2];
        }
        ++rank;
    }
    return rank;
}

inline Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 9);
    return Rational(num(rng), den(rng));
}

inline QuadRat random_quadrat(std::mt19937_64& rng) {
    return QuadRat(random_rational(rng), random_rational(rng));
}

inline SpectralVector random_spectral(std::mt19937_64& rng, int m) {
    std::vector<QuadRat> entries;
    entries.reserve(size_t(1) << m);
    for (size_t i = 0; i < (size_t(1) << m); ++i) entries.push_back(random_quadrat(rng));
    return SpectralVector(m, std::move(entries));
}

} // namespace wenum::testutil
