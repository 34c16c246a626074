#pragma once

#include "wenum/binary_word.hpp"

#include <bit>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wenum {

enum class SelfDualStatus {
    SelfDual,
    DependentRows, // dim < n/2, reported distinctly from orthogonality failure
    NotOrthogonal, // G * G^T != 0
};

/// Weight distribution A_0..A_n of a code (or a candidate for one).
struct WeightDistribution {
    int n = 0;
    std::vector<uint64_t> counts; // size n+1

    WeightDistribution() = default;
    explicit WeightDistribution(int length) : n(length), counts(static_cast<size_t>(length) + 1, 0) {}
    WeightDistribution(int length, std::vector<uint64_t> c) : n(length), counts(std::move(c)) {}

    uint64_t total() const;
    bool symmetric() const; // A_k == A_{n-k} for all k

    /// Nonzero entries as ordered (k, A_k) pairs.
    std::vector<std::pair<int, uint64_t>> pairs() const;

    /// Comma-separated "A_0,A_1,...,A_n".
    std::string to_csv() const;
    static WeightDistribution from_csv(const std::string& line);

    friend bool operator==(const WeightDistribution& x, const WeightDistribution& y) {
        return x.n == y.n && x.counts == y.counts;
    }
};

/// Refined counts A_{k,delta}: weight-k codewords with bit delta at one
/// selected coordinate.
struct RefinedDistribution {
    int n = 0;
    int coordinate = 0; // 1-based
    std::vector<uint64_t> with_zero; // A_{k,0}, size n+1
    std::vector<uint64_t> with_one;  // A_{k,1}, size n+1

    uint64_t at(int k, int delta) const {
        return delta == 0 ? with_zero[static_cast<size_t>(k)] : with_one[static_cast<size_t>(k)];
    }
};

/// A binary linear code given by generator rows. Immutable after
/// construction; self-duality status is computed once up front.
class LinearCode {
  public:
    /// rows.size() must be n/2 with n even; rows need not be independent
    /// (that shows up as SelfDualStatus::DependentRows).
    LinearCode(int n, std::vector<Bits128> rows);

    int length() const { return n_; }
    int dimension() const { return static_cast<int>(rows_.size()); }
    uint64_t codeword_count() const { return uint64_t(1) << rows_.size(); }

    const std::vector<Bits128>& rows() const { return rows_; }
    BinaryWord row(int i) const { return BinaryWord(n_, rows_[static_cast<size_t>(i)]); }

    SelfDualStatus self_dual_status() const { return status_; }
    bool is_self_dual() const { return status_ == SelfDualStatus::SelfDual; }

    /// Codeword for a message (bit j of the message selects row j).
    Bits128 encode(uint64_t message) const;

    bool contains(Bits128 word) const;

    /// Same codeword set (not merely equivalent codes).
    bool same_code(const LinearCode& other) const;

  private:
    int n_;
    std::vector<Bits128> rows_;
    SelfDualStatus status_;
};

/// Parse a generator matrix: one row of '0'/'1' per line, '#' comments and
/// blank lines allowed, n inferred from the line length.
LinearCode load_code(std::string_view text);
LinearCode load_code_file(const std::filesystem::path& path);

/// Bundled codes: "e8", "c2x4", "golay24", "qr48". Each is validated on
/// first load (self-duality, minimum weight, full weight distribution);
/// results are cached per process.
LinearCode builtin_code(std::string_view name);
const std::vector<std::string>& builtin_code_names();

int min_weight(const LinearCode& code);
WeightDistribution weight_distribution(const LinearCode& code);

RefinedDistribution refined_distribution(const LinearCode& code, int coordinate);
/// All n coordinates in a single enumeration pass.
std::vector<RefinedDistribution> refined_distribution_all(const LinearCode& code);

/// Rebuild a code from the dense 0/1 indicator of its codeword set
/// (entries indexed by lexicographic label). The support is verified to be
/// a self-dual subspace of dimension n/2; failures are reported distinctly
/// (WrongSupportSize / SupportNotClosed / NotSelfDual).
LinearCode code_from_indicator(int n, const std::vector<uint8_t>& indicator);

/// Worker count for enumeration-heavy operations: WENUM_THREADS if set,
/// else 1. Results never depend on the count (all merges are commutative
/// exact sums).
int thread_count();

/// Visit every codeword with message index in [lo, hi), in Gray order so
/// consecutive codewords differ by a single generator row.
template <typename F>
void walk_codewords(const std::vector<Bits128>& rows, uint64_t lo, uint64_t hi, F&& visit) {
    if (lo >= hi) return;
    uint64_t gray = lo ^ (lo >> 1);
    Bits128 word = 0;
    for (size_t j = 0; j < rows.size(); ++j)
        if ((gray >> j) & 1) word ^= rows[j];
    for (uint64_t m = lo;;) {
        visit(word);
        if (++m == hi) break;
        word ^= rows[static_cast<size_t>(std::countr_zero(m))];
    }
}

/// Partition [0, total) into contiguous chunks and run work(chunk_index,
/// lo, hi) on a thread per chunk.
void parallel_chunks(uint64_t total, int threads,
                     const std::function<void(int, uint64_t, uint64_t)>& work);

} // namespace wenum
