#include "wenum/designs.hpp"

#include "wenum/error.hpp"

#include <bit>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace wenum {

Rational lambda_count(int n, int w, uint64_t b, int i, int j) {
    if (i < 0 || j < 0 || i + j > 5)
        throw Error(ErrorKind::OutOfRange, "requires i, j >= 0 and i + j <= 5");
    if (w < 0 || w > n) throw Error(ErrorKind::OutOfRange, "block size out of range");
    if (w < i) return 0; // no block of size w contains a larger point set
    return Rational(binomial(n - i - j, w - i) * Int(b), binomial(n, w));
}

Derivative derivative_from_designs(const DesignProfile& profile) {
    int n = profile.n;
    if (n < 10) throw Error(ErrorKind::OutOfRange, "profile length must be at least 10");
    int prev = 0;
    for (const auto& [w, b] : profile.design_weights) {
        if (w < 5 || w > n - 5)
            throw Error(ErrorKind::OutOfRange, "design weights must lie in 5..n-5");
        if (w <= prev) throw Error(ErrorKind::MalformedInput, "weights must be increasing");
        prev = w;
    }

    int t = n - 5;
    // Entries depend on the suffix only through its weight, apart from the
    // zero-word and all-one-word corrections at v=00000 and v=11111.
    std::vector<QuadRat> by_weight(6, QuadRat(0));
    for (int i = 0; i <= 5; ++i) {
        QuadRat sum(0);
        for (const auto& [w, b] : profile.design_weights) {
            Rational lam = lambda_count(n, w, b, i, 5 - i);
            if (lam == 0) continue;
            if (!is_integer(lam)) {
                std::ostringstream os;
                os << "lambda_{" << i << "," << 5 - i << "} for weight " << w
                   << " is not an integer (" << lam << "); (n=" << n << ", w=" << w
                   << ", b=" << b << ") is not a 5-design";
                throw Error(ErrorKind::DesignViolation, os.str());
            }
            sum += QuadRat(lam, 0) * rho_pow(w - i);
        }
        by_weight[static_cast<size_t>(i)] = sum;
    }

    Derivative d;
    d.n = n;
    d.order = t;
    d.entries.reserve(32);
    for (uint32_t v = 0; v < 32; ++v)
        d.entries.push_back(by_weight[static_cast<size_t>(std::popcount(v))]);
    if (profile.has_zero_word) d.entries[0] += QuadRat(1);
    if (profile.has_all_one_word) d.entries[31] += rho_pow(t);
    return d;
}

DesignProfile profile_from_distribution(const WeightDistribution& dist) {
    DesignProfile p;
    p.n = dist.n;
    p.has_zero_word = dist.counts[0] == 1;
    p.has_all_one_word = dist.counts[static_cast<size_t>(dist.n)] == 1;
    for (int w = 5; w <= dist.n - 5; ++w)
        if (dist.counts[static_cast<size_t>(w)])
            p.design_weights.emplace_back(w, dist.counts[static_cast<size_t>(w)]);
    return p;
}

DesignProfile profile_from_code(const LinearCode& code) {
    return profile_from_distribution(weight_distribution(code));
}

DesignProfile load_profile(std::istream& is) {
    DesignProfile p;
    std::string line;
    bool have_n = false;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (!have_n) {
            if (std::sscanf(line.c_str(), "n=%d", &p.n) != 1 || p.n <= 0)
                throw Error(ErrorKind::MalformedInput, "expected profile header 'n=<n>'");
            have_n = true;
            continue;
        }
        std::istringstream ls(line);
        long w = 0;
        unsigned long long b = 0;
        if (!(ls >> w >> b))
            throw Error(ErrorKind::MalformedInput, "expected '<w> <b_w>' line, got '" + line + "'");
        p.design_weights.emplace_back(static_cast<int>(w), static_cast<uint64_t>(b));
    }
    if (!have_n) throw Error(ErrorKind::MalformedInput, "empty profile");
    return p;
}

void write_profile(std::ostream& os, const DesignProfile& profile) {
    os << "n=" << profile.n << "\n";
    for (const auto& [w, b] : profile.design_weights) os << w << " " << b << "\n";
}

const WeightDistribution& putative72_distribution() {
    static const WeightDistribution dist = [] {
        WeightDistribution d(72);
        const std::pair<int, uint64_t> pairs[] = {
            {0, 1},
            {16, 249849},
            {20, 18106704},
            {24, 462962955},
            {28, 4397342400},
            {32, 16602715899},
            {36, 25756721120},
            {40, 16602715899},
            {44, 4397342400},
            {48, 462962955},
            {52, 18106704},
            {56, 249849},
            {72, 1},
        };
        for (const auto& [k, c] : pairs) d.counts[static_cast<size_t>(k)] = c;
        if (d.total() != (uint64_t(1) << 36) || !d.symmetric())
            throw Error(ErrorKind::MalformedInput, "length-72 table failed its checksums");
        for (int k = 1; k < 16; ++k)
            if (d.counts[static_cast<size_t>(k)])
                throw Error(ErrorKind::MalformedInput, "length-72 table failed its checksums");
        return d;
    }();
    return dist;
}

} // namespace wenum
