#pragma once

#include "wenum/error.hpp"

#include <bit>
#include <cstdint>
#include <string>

namespace wenum {

// Words are stored as their lexicographic label: coordinate 1 is the most
// significant bit, so the label of a word IS the integer whose binary
// expansion the word spells. 128 bits covers every supported length.
using Bits128 = unsigned __int128;

inline int popcount128(Bits128 v) {
    return std::popcount(static_cast<uint64_t>(v)) +
           std::popcount(static_cast<uint64_t>(v >> 64));
}

inline int countr_zero128(Bits128 v) {
    uint64_t low = static_cast<uint64_t>(v);
    if (low) return std::countr_zero(low);
    return 64 + std::countr_zero(static_cast<uint64_t>(v >> 64));
}

inline Bits128 low_mask128(int n) {
    return n >= 128 ? ~Bits128(0) : (Bits128(1) << n) - 1;
}

struct BinaryWord {
    int n = 0;       // length; coordinates are 1..n
    Bits128 bits = 0; // lexicographic label

    BinaryWord() = default;
    BinaryWord(int length, Bits128 label) : n(length), bits(label & low_mask128(length)) {}

    int weight() const { return popcount128(bits); }

    BinaryWord complement() const { return BinaryWord(n, ~bits & low_mask128(n)); }

    /// Coordinate i (1-based; coordinate 1 = most significant label bit).
    int coordinate(int i) const {
        if (i < 1 || i > n) throw Error(ErrorKind::OutOfRange, "coordinate out of range");
        return static_cast<int>((bits >> (n - i)) & 1);
    }

    /// Concatenation uv: this word supplies the leading coordinates.
    BinaryWord concat(const BinaryWord& v) const {
        return BinaryWord(n + v.n, (bits << v.n) | v.bits);
    }

    uint64_t label64() const {
        if (n > 64) throw Error(ErrorKind::OutOfRange, "label does not fit in 64 bits");
        return static_cast<uint64_t>(bits);
    }

    std::string to_string() const {
        std::string s(static_cast<size_t>(n), '0');
        for (int i = 0; i < n; ++i)
            if ((bits >> (n - 1 - i)) & 1) s[static_cast<size_t>(i)] = '1';
        return s;
    }

    static BinaryWord from_string(const std::string& s);

    friend bool operator==(const BinaryWord& x, const BinaryWord& y) {
        return x.n == y.n && x.bits == y.bits;
    }
};

inline BinaryWord BinaryWord::from_string(const std::string& s) {
    if (s.empty() || s.size() > 128)
        throw Error(ErrorKind::MalformedInput, "word length must be 1..128");
    Bits128 v = 0;
    for (char ch : s) {
        if (ch != '0' && ch != '1')
            throw Error(ErrorKind::MalformedInput, "word must consist of '0'/'1'");
        v = (v << 1) | static_cast<Bits128>(ch == '1');
    }
    return BinaryWord(static_cast<int>(s.size()), v);
}

} // namespace wenum
