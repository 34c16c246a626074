#pragma once

#include "wenum/linear_code.hpp"
#include "wenum/quadrat.hpp"
#include "wenum/transform.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace wenum {

/// The full 0/1 enumerator of a code over all 2^n words, stored sparsely as
/// the sorted set of codeword labels.
struct ExactEnumerator {
    int n = 0;
    std::vector<uint64_t> support; // sorted lexicographic labels

    /// Dense 0/1 entries over all 2^n labels (n <= 24).
    std::vector<uint8_t> to_dense() const;
    /// Same, as an exact vector ready for transform checks (n <= 24).
    SpectralVector to_spectral() const;
};

ExactEnumerator exact_enumerator(const LinearCode& code);

/// Order-t derivative: 2^(n-t) exact entries indexed by the suffix label
/// v; entry[v] accumulates rho^wt(u) over all t-bit prefixes u with uv in
/// the code.
struct Derivative {
    int n = 0;
    int order = 0;
    std::vector<QuadRat> entries;

    SpectralVector to_spectral() const { return SpectralVector(n - order, entries); }
};

/// Direct computation by a single pass over all codewords. For codes longer
/// than 24 the order must satisfy n - t <= 26.
Derivative derivative(const LinearCode& code, int t);

/// One-step recursion: out[v] = in[(0)v] + rho * in[(1)v], halving the
/// length. The prepended coordinate is the leading suffix bit, so the two
/// halves of the entry vector are combined pointwise.
Derivative derivative_step(const Derivative& d);

/// Second-half symmetry: entry[(1)~v] == (-1)^wt(v) * rho^t * conj(entry[(0)v])
/// for every v. Holds for every derivative of a code containing the all-one
/// word; requires order <= n-1.
bool check_halves(const Derivative& d);

/// Collapse of the full recursion: sum of entry[v] * rho^wt(v) over all
/// suffixes. For a derivative of a code this equals the order-n scalar.
QuadRat rho_weighted_sum(const Derivative& d);

/// The order-n scalar from a weight distribution alone: sum of A_k rho^k.
QuadRat rho_weight_sum(const WeightDistribution& dist);

/// Text form: "n=<n> t=<t>" header, then one "<index> <d>*p + <c>" line per
/// entry in increasing suffix-label order.
void write_derivative(std::ostream& os, const Derivative& d);
Derivative read_derivative(std::istream& is);

} // namespace wenum
