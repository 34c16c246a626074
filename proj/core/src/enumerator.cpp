#include "wenum/enumerator.hpp"

#include "wenum/error.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace wenum {

namespace {

// Per-thread tables stay under this many uint64 counters.
constexpr size_t kCounterBudget = size_t(1) << 27;

std::vector<QuadRat> rho_table(int max_exp) {
    std::vector<QuadRat> table;
    table.reserve(static_cast<size_t>(max_exp) + 1);
    for (int k = 0; k <= max_exp; ++k) table.push_back(rho_pow(k));
    return table;
}

} // namespace

ExactEnumerator exact_enumerator(const LinearCode& code) {
    if (code.self_dual_status() == SelfDualStatus::DependentRows)
        throw Error(ErrorKind::DependentRows, "generator rows are linearly dependent");
    if (code.length() > 56)
        throw Error(ErrorKind::ResourceLimit, "support enumeration is limited to length <= 56");
    ExactEnumerator we;
    we.n = code.length();
    we.support.reserve(code.codeword_count());
    walk_codewords(code.rows(), 0, code.codeword_count(),
                   [&](Bits128 w) { we.support.push_back(static_cast<uint64_t>(w)); });
    std::sort(we.support.begin(), we.support.end());
    return we;
}

std::vector<uint8_t> ExactEnumerator::to_dense() const {
    if (n > 24)
        throw Error(ErrorKind::ResourceLimit, "dense enumerator is limited to length <= 24");
    std::vector<uint8_t> dense(size_t(1) << n, 0);
    for (uint64_t label : support) dense[label] = 1;
    return dense;
}

SpectralVector ExactEnumerator::to_spectral() const {
    if (n > 24)
        throw Error(ErrorKind::ResourceLimit, "dense enumerator is limited to length <= 24");
    std::vector<QuadRat> entries(size_t(1) << n, QuadRat(0));
    for (uint64_t label : support) entries[label] = QuadRat(1);
    return SpectralVector(n, std::move(entries));
}

Derivative derivative(const LinearCode& code, int t) {
    int n = code.length();
    if (t < 0 || t > n) throw Error(ErrorKind::OutOfRange, "order must be in 0..n");
    if (code.self_dual_status() == SelfDualStatus::DependentRows)
        throw Error(ErrorKind::DependentRows, "generator rows are linearly dependent");
    if (n > 56)
        throw Error(ErrorKind::ResourceLimit, "enumeration is limited to length <= 56");
    int m = n - t;
    if (n > 24 && m > 26)
        throw Error(ErrorKind::ResourceLimit,
                    "for length > 24 the order must satisfy n - t <= 26");

    size_t width = size_t(1) << m;
    Bits128 suffix_mask = low_mask128(m);
    int threads = thread_count();

    // counts[v * (t+1) + w] = number of codewords with suffix label v and
    // prefix weight w; the exact entries are assembled afterwards so the hot
    // loop touches only machine integers.
    std::vector<uint64_t> counts(width * (static_cast<size_t>(t) + 1), 0);
    auto accumulate_weight_range = [&](std::vector<uint64_t>& into, int w_lo, int w_hi,
                                       size_t stride) {
        // stride 1 collapses the weight axis (single-weight pass).
        std::vector<std::vector<uint64_t>> local(
            static_cast<size_t>(threads),
            std::vector<uint64_t>(width * (stride == 1 ? 1 : static_cast<size_t>(t) + 1), 0));
        parallel_chunks(code.codeword_count(), threads, [&](int ti, uint64_t lo, uint64_t hi) {
            auto& tab = local[static_cast<size_t>(ti)];
            walk_codewords(code.rows(), lo, hi, [&](Bits128 word) {
                int w = popcount128(word >> m);
                if (w < w_lo || w > w_hi) return;
                size_t v = static_cast<size_t>(word & suffix_mask);
                tab[stride == 1 ? v : v * (static_cast<size_t>(t) + 1) + static_cast<size_t>(w)]++;
            });
        });
        for (const auto& tab : local)
            for (size_t i = 0; i < tab.size(); ++i) into[i] += tab[i];
    };

    bool single_pass =
        width * (static_cast<size_t>(t) + 1) * static_cast<size_t>(threads) <= kCounterBudget;
    if (single_pass) {
        accumulate_weight_range(counts, 0, t, static_cast<size_t>(t) + 1);
    } else {
        // One enumeration per prefix weight keeps the tables bounded.
        for (int w = 0; w <= t; ++w) {
            std::vector<uint64_t> slice(width, 0);
            accumulate_weight_range(slice, w, w, 1);
            for (size_t v = 0; v < width; ++v)
                counts[v * (static_cast<size_t>(t) + 1) + static_cast<size_t>(w)] = slice[v];
        }
    }

    std::vector<QuadRat> rho = rho_table(t);
    Derivative d;
    d.n = n;
    d.order = t;
    d.entries.assign(width, QuadRat(0));
    for (size_t v = 0; v < width; ++v) {
        QuadRat sum(0);
        for (int w = 0; w <= t; ++w) {
            uint64_t c = counts[v * (static_cast<size_t>(t) + 1) + static_cast<size_t>(w)];
            if (c) sum += QuadRat(Rational(c), 0) * rho[static_cast<size_t>(w)];
        }
        d.entries[v] = std::move(sum);
    }
    return d;
}

Derivative derivative_step(const Derivative& d) {
    if (d.order >= d.n) throw Error(ErrorKind::OutOfRange, "derivative is already order n");
    size_t half = d.entries.size() / 2;
    Derivative out;
    out.n = d.n;
    out.order = d.order + 1;
    out.entries.reserve(half);
    QuadRat rho = QuadRat::rho();
    for (size_t v = 0; v < half; ++v)
        out.entries.push_back(d.entries[v] + rho * d.entries[half + v]);
    return out;
}

bool check_halves(const Derivative& d) {
    if (d.order > d.n - 1) throw Error(ErrorKind::OutOfRange, "requires order <= n-1");
    size_t half = d.entries.size() / 2;
    size_t vmask = half - 1;
    QuadRat rho_t = rho_pow(d.order);
    for (size_t v = 0; v < half; ++v) {
        size_t complement = ~v & vmask;
        QuadRat expected = rho_t * d.entries[v].conj();
        if (popcount128(static_cast<Bits128>(v)) % 2) expected = -expected;
        if (d.entries[half + complement] != expected) return false;
    }
    return true;
}

QuadRat rho_weighted_sum(const Derivative& d) {
    int m = d.n - d.order;
    std::vector<QuadRat> rho = rho_table(m);
    QuadRat sum(0);
    for (size_t v = 0; v < d.entries.size(); ++v)
        sum += d.entries[v] * rho[static_cast<size_t>(popcount128(static_cast<Bits128>(v)))];
    return sum;
}

QuadRat rho_weight_sum(const WeightDistribution& dist) {
    QuadRat sum(0);
    for (int k = 0; k <= dist.n; ++k) {
        uint64_t c = dist.counts[static_cast<size_t>(k)];
        if (c) sum += QuadRat(Rational(c), 0) * rho_pow(k);
    }
    return sum;
}

void write_derivative(std::ostream& os, const Derivative& d) {
    os << "n=" << d.n << " t=" << d.order << "\n";
    for (size_t v = 0; v < d.entries.size(); ++v)
        os << v << " " << to_rho_string(d.entries[v]) << "\n";
}

Derivative read_derivative(std::istream& is) {
    std::string line;
    int n = -1, t = -1;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (std::sscanf(line.c_str(), "n=%d t=%d", &n, &t) != 2)
            throw Error(ErrorKind::MalformedInput, "expected header 'n=<n> t=<t>'");
        break;
    }
    if (n < 0 || t < 0 || t > n || n - t > 26)
        throw Error(ErrorKind::MalformedInput, "bad derivative header");
    Derivative d;
    d.n = n;
    d.order = t;
    size_t width = size_t(1) << (n - t);
    d.entries.reserve(width);
    while (d.entries.size() < width && std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        size_t index = 0;
        ls >> index;
        if (!ls || index != d.entries.size())
            throw Error(ErrorKind::MalformedInput, "entries must appear in label order");
        std::string rest;
        std::getline(ls, rest);
        d.entries.push_back(parse_rho_string(rest));
    }
    if (d.entries.size() != width)
        throw Error(ErrorKind::MalformedInput, "missing entries in derivative file");
    return d;
}

} // namespace wenum
