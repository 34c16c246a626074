#pragma once

#include "wenum/linear_code.hpp"
#include "wenum/rational.hpp"

#include <vector>

namespace wenum {

/// Exact (n+1)x(n+1) Krawtchouk value matrix:
///   entry(i, j) = sum_m (-1)^m C(j, m) C(n-j, i-m).
/// Satisfies entry(0, j) = 1, entry(i, 0) = C(n, i), and M*M = 2^n * I.
struct KrawtchoukMatrix {
    int n = 0;
    std::vector<Int> entries; // row-major, (n+1)^2

    const Int& at(int i, int j) const {
        return entries[static_cast<size_t>(i) * (static_cast<size_t>(n) + 1) +
                       static_cast<size_t>(j)];
    }
};

KrawtchoukMatrix krawtchouk_matrix(int n);

/// True iff X * M = 2^(n/2) * X where M is the transpose of the Krawtchouk
/// matrix — the fixed-point condition every self-dual weight distribution
/// satisfies.
bool macwilliams_fixed_point(const WeightDistribution& dist);

/// All nonnegative-integer row vectors X with X[0] = 1 and X[odd] = 0
/// solving X * M = 2^(n/2) * X, in lexicographic order. Odd weights are
/// excluded up front (self-dual codewords have even weight; the raw
/// equation also has odd-weight solutions no code realizes); the symmetry
/// X[k] = X[n-k] is NOT assumed and emerges from the equation. The search
/// is exhaustive: the component at weight 0 forces sum X[k] = 2^(n/2),
/// which bounds the tree; partially evaluated components prune it.
/// n must be even, <= 12.
std::vector<WeightDistribution> enumerate_candidates(int n);

} // namespace wenum
