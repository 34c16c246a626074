#pragma once

#include "wenum/enumerator.hpp"
#include "wenum/linear_code.hpp"
#include "wenum/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

namespace wenum {

/// Weights whose codeword supports form 5-designs, with block counts. The
/// zero and all-one words sit outside the designs and are flagged
/// separately.
struct DesignProfile {
    int n = 0;
    std::vector<std::pair<int, uint64_t>> design_weights; // (w, b_w), strictly increasing w
    bool has_zero_word = true;
    bool has_all_one_word = true;
};

/// Blocks of a 5-design (b blocks of size w on n points) containing a fixed
/// i-set and avoiding a disjoint j-set, i + j <= 5:
///     lambda_{i,j} = b * C(n-i-j, w-i) / C(n, w).
/// The result is rational; callers that need a block count must reject
/// non-integers (that signals the (n, w, b) triple is not a 5-design).
Rational lambda_count(int n, int w, uint64_t b, int i, int j);

/// Order-(n-5) derivative assembled from the design profile alone: for a
/// 5-bit suffix v with i = wt(v),
///   entry[v] = [v=00000] + [v=11111]*rho^(n-5)
///            + sum_w lambda_{i,5-i}(w) * rho^(w-i).
Derivative derivative_from_designs(const DesignProfile& profile);

/// Profile of a code whose fixed-weight supports are 5-designs: every
/// weight w with A_w > 0 and 5 <= w <= n-5.
DesignProfile profile_from_code(const LinearCode& code);
DesignProfile profile_from_distribution(const WeightDistribution& dist);

/// Profile file: optional '#' comments, a "n=<n>" header, then "<w> <b_w>"
/// lines.
DesignProfile load_profile(std::istream& is);
void write_profile(std::ostream& os, const DesignProfile& profile);

/// Weight distribution of the putative [72,36,16] self-dual code. Checked
/// at first use: total 2^36, symmetric, minimum nonzero weight 16.
const WeightDistribution& putative72_distribution();

} // namespace wenum
