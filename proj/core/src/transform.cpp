#include "wenum/transform.hpp"

#include "wenum/error.hpp"

#include <bit>

namespace wenum {

SpectralVector make_spectral(std::vector<QuadRat> entries) {
    if (entries.empty() || !std::has_single_bit(entries.size()))
        throw Error(ErrorKind::MalformedInput, "length must be a power of two");
    int m = std::countr_zero(entries.size());
    return SpectralVector(m, std::move(entries));
}

SpectralVector apply_hadamard_power(const SpectralVector& v) {
    if (v.entries.size() != (size_t(1) << v.m))
        throw Error(ErrorKind::MalformedInput, "length must be 2^m");
    std::vector<QuadRat> out = v.entries;
    for (int stage = 0; stage < v.m; ++stage) {
        size_t bit = size_t(1) << stage;
        for (size_t i = 0; i < out.size(); ++i) {
            if (i & bit) continue;
            QuadRat x = out[i];
            QuadRat y = out[i | bit];
            out[i] = x + y;
            out[i | bit] = x - y;
        }
    }
    return SpectralVector(v.m, std::move(out));
}

SpectralVector apply_k_power(const SpectralVector& v) {
    SpectralVector h = apply_hadamard_power(v);
    // (sqrt2 / 2)^m = sqrt2^m / 2^m
    QuadRat scale = sqrt2_pow(static_cast<unsigned>(v.m)) /
                    QuadRat(Rational(Int(1) << v.m), 0);
    for (QuadRat& e : h.entries) e *= scale;
    return h;
}

bool is_eigenvector_one(const SpectralVector& v) {
    SpectralVector h = apply_hadamard_power(v);
    QuadRat scale = sqrt2_pow(static_cast<unsigned>(v.m));
    for (size_t i = 0; i < h.entries.size(); ++i)
        if (h.entries[i] != scale * v.entries[i]) return false;
    return true;
}

SpectralVector eigenbasis_row(int m, uint64_t label) {
    if (m < 0 || m > 26) throw Error(ErrorKind::OutOfRange, "m must be in 0..26");
    if (m < 64 && (label >> m) != 0)
        throw Error(ErrorKind::OutOfRange, "label must fit in m bits");
    // Entry j of the Kronecker product row is rho^a * mu^b where a counts
    // positions with j-bit 1 under a 0 label bit and b those under a 1.
    std::vector<QuadRat> entries;
    entries.reserve(size_t(1) << m);
    uint64_t mask = m == 64 ? ~uint64_t(0) : ((uint64_t(1) << m) - 1);
    for (uint64_t j = 0; j < (uint64_t(1) << m); ++j) {
        int a = std::popcount(j & ~label & mask);
        int b = std::popcount(j & label);
        QuadRat mu_pow(1);
        for (int i = 0; i < b; ++i) mu_pow *= QuadRat::mu();
        entries.push_back(rho_pow(a) * mu_pow);
    }
    return SpectralVector(m, std::move(entries));
}

} // namespace wenum
