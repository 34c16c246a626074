#pragma once

#include "wenum/quadrat.hpp"

#include <cstdint>
#include <vector>

namespace wenum {

/// Exact vector of length 2^m, acted on by Kronecker powers of the 2x2
/// Hadamard matrix. Entries are indexed by m-bit labels, coordinate 1 most
/// significant.
struct SpectralVector {
    int m = 0;
    std::vector<QuadRat> entries;

    SpectralVector() = default;
    SpectralVector(int order, std::vector<QuadRat> e) : m(order), entries(std::move(e)) {}
};

SpectralVector make_spectral(std::vector<QuadRat> entries);

/// v * H^[m] with H = [[1,1],[1,-1]] (unnormalized), as m butterfly stages.
/// H^[m] is symmetric, so the row-vector action coincides with the plain
/// in-place transform; stage s pairs entries differing in label bit s.
SpectralVector apply_hadamard_power(const SpectralVector& v);

/// v * K^[m] where K = H / sqrt(2): the Hadamard result scaled by
/// (sqrt2/2)^m. K^[m] is an involution.
SpectralVector apply_k_power(const SpectralVector& v);

/// True iff v is fixed by K^[m], tested without division:
/// v * H^[m] == (sqrt 2)^m * v.
bool is_eigenvector_one(const SpectralVector& v);

/// Row of the eigenbasis Kronecker power B^[m], B = [[1, rho], [1, mu]],
/// indexed by an m-bit label. Even-weight labels give +1 eigenvectors of
/// K^[m], odd-weight labels -1.
SpectralVector eigenbasis_row(int m, uint64_t label);

} // namespace wenum
