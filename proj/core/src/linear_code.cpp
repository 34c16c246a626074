#include "wenum/linear_code.hpp"

#include "wenum/error.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

namespace wenum {

namespace {

// Row echelon rank over F2.
int gf2_rank(std::vector<Bits128> rows) {
    int rank = 0;
    for (int bit = 127; bit >= 0 && rank < static_cast<int>(rows.size()); --bit) {
        Bits128 mask = Bits128(1) << bit;
        int pivot = -1;
        for (int i = rank; i < static_cast<int>(rows.size()); ++i) {
            if (rows[static_cast<size_t>(i)] & mask) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(rows[static_cast<size_t>(rank)], rows[static_cast<size_t>(pivot)]);
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            if (i != rank && (rows[static_cast<size_t>(i)] & mask))
                rows[static_cast<size_t>(i)] ^= rows[static_cast<size_t>(rank)];
        }
        ++rank;
    }
    return rank;
}

SelfDualStatus classify(int n, const std::vector<Bits128>& rows) {
    if (gf2_rank(rows) != n / 2) return SelfDualStatus::DependentRows;
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = i; j < rows.size(); ++j)
            if (popcount128(rows[i] & rows[j]) % 2) return SelfDualStatus::NotOrthogonal;
    return SelfDualStatus::SelfDual;
}

void require_enumerable(const LinearCode& code) {
    if (code.self_dual_status() == SelfDualStatus::DependentRows)
        throw Error(ErrorKind::DependentRows, "generator rows are linearly dependent");
    if (code.length() > 56)
        throw Error(ErrorKind::ResourceLimit,
                    "codeword enumeration is limited to length <= 56");
}

} // namespace

LinearCode::LinearCode(int n, std::vector<Bits128> rows) : n_(n), rows_(std::move(rows)) {
    if (n_ <= 0 || n_ % 2 != 0 || n_ > 128)
        throw Error(ErrorKind::MalformedInput, "code length must be even, in 2..128");
    if (static_cast<int>(rows_.size()) != n_ / 2)
        throw Error(ErrorKind::MalformedInput, "expected n/2 generator rows");
    Bits128 mask = low_mask128(n_);
    for (Bits128& r : rows_) r &= mask;
    status_ = classify(n_, rows_);
}

Bits128 LinearCode::encode(uint64_t message) const {
    Bits128 word = 0;
    for (size_t j = 0; j < rows_.size(); ++j)
        if ((message >> j) & 1) word ^= rows_[j];
    return word;
}

bool LinearCode::contains(Bits128 word) const {
    // Reduce against the rows; in the row space iff the residue is zero.
    std::vector<Bits128> basis = rows_;
    std::vector<Bits128> reduced;
    for (Bits128 r : basis) {
        for (Bits128 b : reduced) r = std::min(r, r ^ b);
        if (r) reduced.push_back(r);
        std::sort(reduced.rbegin(), reduced.rend());
    }
    Bits128 w = word;
    for (Bits128 b : reduced) w = std::min(w, w ^ b);
    return w == 0;
}

bool LinearCode::same_code(const LinearCode& other) const {
    if (n_ != other.n_ || rows_.size() != other.rows_.size()) return false;
    for (Bits128 r : other.rows_)
        if (!contains(r)) return false;
    for (Bits128 r : rows_)
        if (!other.contains(r)) return false;
    return true;
}

LinearCode load_code(std::string_view text) {
    std::vector<Bits128> rows;
    int n = -1;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
        while (!line.empty() && line.front() == ' ') line.remove_prefix(1);
        if (line.empty() || line.front() == '#') {
            if (pos > text.size()) break;
            continue;
        }
        if (n < 0) {
            n = static_cast<int>(line.size());
            if (n > 128) throw Error(ErrorKind::MalformedInput, "row longer than 128 bits");
        } else if (static_cast<int>(line.size()) != n) {
            throw Error(ErrorKind::MalformedInput, "rows have differing lengths");
        }
        Bits128 v = 0;
        for (char ch : line) {
            if (ch != '0' && ch != '1')
                throw Error(ErrorKind::MalformedInput, "rows must consist of '0'/'1'");
            v = (v << 1) | static_cast<Bits128>(ch == '1');
        }
        rows.push_back(v);
        if (pos > text.size()) break;
    }
    if (n < 0) throw Error(ErrorKind::MalformedInput, "no generator rows found");
    if (n % 2 != 0) throw Error(ErrorKind::MalformedInput, "code length must be even");
    if (static_cast<int>(rows.size()) != n / 2) {
        std::ostringstream os;
        os << "expected " << n / 2 << " rows for length " << n << ", got " << rows.size();
        throw Error(ErrorKind::MalformedInput, os.str());
    }
    return LinearCode(n, std::move(rows));
}

LinearCode load_code_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_code(buf.str());
}

int thread_count() {
    if (const char* env = std::getenv("WENUM_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && v <= 256) return static_cast<int>(v);
    }
    return 1;
}

void parallel_chunks(uint64_t total, int threads,
                     const std::function<void(int, uint64_t, uint64_t)>& work) {
    if (threads <= 1 || total < 1024) {
        work(0, 0, total);
        return;
    }
    uint64_t chunk = (total + static_cast<uint64_t>(threads) - 1) / static_cast<uint64_t>(threads);
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) {
        uint64_t lo = chunk * static_cast<uint64_t>(i);
        uint64_t hi = std::min(total, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&work, i, lo, hi] { work(i, lo, hi); });
    }
    for (auto& t : pool) t.join();
}

WeightDistribution weight_distribution(const LinearCode& code) {
    require_enumerable(code);
    int n = code.length();
    int threads = thread_count();
    std::vector<std::vector<uint64_t>> local(
        static_cast<size_t>(threads), std::vector<uint64_t>(static_cast<size_t>(n) + 1, 0));
    parallel_chunks(code.codeword_count(), threads, [&](int t, uint64_t lo, uint64_t hi) {
        auto& counts = local[static_cast<size_t>(t)];
        walk_codewords(code.rows(), lo, hi,
                       [&](Bits128 w) { ++counts[static_cast<size_t>(popcount128(w))]; });
    });
    WeightDistribution dist(n);
    for (const auto& counts : local)
        for (size_t k = 0; k < counts.size(); ++k) dist.counts[k] += counts[k];
    return dist;
}

int min_weight(const LinearCode& code) {
    require_enumerable(code);
    int threads = thread_count();
    std::vector<int> local(static_cast<size_t>(threads), code.length() + 1);
    parallel_chunks(code.codeword_count(), threads, [&](int t, uint64_t lo, uint64_t hi) {
        int best = code.length() + 1;
        walk_codewords(code.rows(), lo, hi, [&](Bits128 w) {
            if (w == 0) return;
            best = std::min(best, popcount128(w));
        });
        local[static_cast<size_t>(t)] = best;
    });
    return *std::min_element(local.begin(), local.end());
}

RefinedDistribution refined_distribution(const LinearCode& code, int coordinate) {
    require_enumerable(code);
    int n = code.length();
    if (coordinate < 1 || coordinate > n)
        throw Error(ErrorKind::OutOfRange, "coordinate must be in 1..n");
    Bits128 mask = Bits128(1) << (n - coordinate);
    int threads = thread_count();
    std::vector<std::vector<uint64_t>> local(
        static_cast<size_t>(threads), std::vector<uint64_t>(2 * (static_cast<size_t>(n) + 1), 0));
    parallel_chunks(code.codeword_count(), threads, [&](int t, uint64_t lo, uint64_t hi) {
        auto& counts = local[static_cast<size_t>(t)];
        walk_codewords(code.rows(), lo, hi, [&](Bits128 w) {
            size_t k = static_cast<size_t>(popcount128(w));
            ++counts[2 * k + ((w & mask) ? 1 : 0)];
        });
    });
    RefinedDistribution refined;
    refined.n = n;
    refined.coordinate = coordinate;
    refined.with_zero.assign(static_cast<size_t>(n) + 1, 0);
    refined.with_one.assign(static_cast<size_t>(n) + 1, 0);
    for (const auto& counts : local) {
        for (int k = 0; k <= n; ++k) {
            refined.with_zero[static_cast<size_t>(k)] += counts[2 * static_cast<size_t>(k)];
            refined.with_one[static_cast<size_t>(k)] += counts[2 * static_cast<size_t>(k) + 1];
        }
    }
    return refined;
}

std::vector<RefinedDistribution> refined_distribution_all(const LinearCode& code) {
    require_enumerable(code);
    int n = code.length();
    int threads = thread_count();
    // counts[t][coord][k][delta] flattened; delta folded as k*2+delta.
    size_t per = static_cast<size_t>(n) * 2 * (static_cast<size_t>(n) + 1);
    std::vector<std::vector<uint64_t>> local(static_cast<size_t>(threads),
                                             std::vector<uint64_t>(per, 0));
    parallel_chunks(code.codeword_count(), threads, [&](int t, uint64_t lo, uint64_t hi) {
        auto& counts = local[static_cast<size_t>(t)];
        walk_codewords(code.rows(), lo, hi, [&](Bits128 w) {
            size_t k = static_cast<size_t>(popcount128(w));
            // Iterate only the set bits; the with_zero side is recovered from
            // the plain weight distribution afterwards.
            Bits128 rest = w;
            while (rest) {
                int bit = countr_zero128(rest);
                int coord = n - bit; // 1-based coordinate
                counts[(static_cast<size_t>(coord) - 1) * 2 * (static_cast<size_t>(n) + 1) +
                       2 * k + 1]++;
                rest &= rest - 1;
            }
        });
    });
    WeightDistribution dist = weight_distribution(code);
    std::vector<RefinedDistribution> out(static_cast<size_t>(n));
    for (int c = 1; c <= n; ++c) {
        auto& r = out[static_cast<size_t>(c) - 1];
        r.n = n;
        r.coordinate = c;
        r.with_zero.assign(static_cast<size_t>(n) + 1, 0);
        r.with_one.assign(static_cast<size_t>(n) + 1, 0);
        for (const auto& counts : local)
            for (int k = 0; k <= n; ++k)
                r.with_one[static_cast<size_t>(k)] +=
                    counts[(static_cast<size_t>(c) - 1) * 2 * (static_cast<size_t>(n) + 1) +
                           2 * static_cast<size_t>(k) + 1];
        for (int k = 0; k <= n; ++k)
            r.with_zero[static_cast<size_t>(k)] =
                dist.counts[static_cast<size_t>(k)] - r.with_one[static_cast<size_t>(k)];
    }
    return out;
}

LinearCode code_from_indicator(int n, const std::vector<uint8_t>& indicator) {
    if (n <= 0 || n % 2 != 0) throw Error(ErrorKind::MalformedInput, "length must be positive even");
    if (n > 26 || indicator.size() != (size_t(1) << n))
        throw Error(ErrorKind::ResourceLimit, "indicator must have length 2^n with n <= 26");
    std::vector<Bits128> support;
    for (size_t v = 0; v < indicator.size(); ++v) {
        if (indicator[v] == 1)
            support.push_back(static_cast<Bits128>(v));
        else if (indicator[v] != 0)
            throw Error(ErrorKind::MalformedInput, "indicator entries must be 0 or 1");
    }
    if (support.empty()) throw Error(ErrorKind::MalformedInput, "indicator is identically zero");
    if (support.size() != (size_t(1) << (n / 2)))
        throw Error(ErrorKind::WrongSupportSize, "support size is not 2^(n/2)");

    // Extract a basis, then confirm the support is exactly its span.
    std::vector<Bits128> basis; // kept with strictly decreasing leading bits
    for (Bits128 w : support) {
        Bits128 r = w;
        for (Bits128 b : basis) r = std::min(r, r ^ b);
        if (r) {
            basis.push_back(r);
            std::sort(basis.rbegin(), basis.rend());
        }
    }
    if (basis.size() != static_cast<size_t>(n / 2) ||
        (size_t(1) << basis.size()) != support.size())
        throw Error(ErrorKind::SupportNotClosed, "support is not closed under addition");
    for (Bits128 w : support) {
        Bits128 r = w;
        for (Bits128 b : basis) r = std::min(r, r ^ b);
        if (r) throw Error(ErrorKind::SupportNotClosed, "support is not closed under addition");
    }

    LinearCode code(n, basis);
    if (!code.is_self_dual())
        throw Error(ErrorKind::NotSelfDual, "indicator support spans a non-self-dual code");
    return code;
}

uint64_t WeightDistribution::total() const {
    uint64_t s = 0;
    for (uint64_t c : counts) s += c;
    return s;
}

bool WeightDistribution::symmetric() const {
    for (int k = 0; k <= n; ++k)
        if (counts[static_cast<size_t>(k)] != counts[static_cast<size_t>(n - k)]) return false;
    return true;
}

std::vector<std::pair<int, uint64_t>> WeightDistribution::pairs() const {
    std::vector<std::pair<int, uint64_t>> out;
    for (int k = 0; k <= n; ++k)
        if (counts[static_cast<size_t>(k)]) out.emplace_back(k, counts[static_cast<size_t>(k)]);
    return out;
}

std::string WeightDistribution::to_csv() const {
    std::ostringstream os;
    for (int k = 0; k <= n; ++k) {
        if (k) os << ',';
        os << counts[static_cast<size_t>(k)];
    }
    return os.str();
}

WeightDistribution WeightDistribution::from_csv(const std::string& line) {
    std::vector<uint64_t> counts;
    std::istringstream is(line);
    std::string field;
    while (std::getline(is, field, ',')) {
        size_t used = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(field, &used);
        } catch (const std::exception&) {
            throw Error(ErrorKind::MalformedInput, "bad count '" + field + "'");
        }
        while (used < field.size() && std::isspace(static_cast<unsigned char>(field[used]))) ++used;
        if (used != field.size())
            throw Error(ErrorKind::MalformedInput, "bad count '" + field + "'");
        counts.push_back(v);
    }
    if (counts.size() < 2) throw Error(ErrorKind::MalformedInput, "distribution needs >= 2 entries");
    int n = static_cast<int>(counts.size()) - 1;
    return WeightDistribution(n, std::move(counts));
}

} // namespace wenum
