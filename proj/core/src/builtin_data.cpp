#include "wenum/error.hpp"
#include "wenum/linear_code.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace wenum {

namespace {

// Extended Hamming [8,4,4].
const char kE8[] = "10000111\n"
                   "01001011\n"
                   "00101101\n"
                   "00011110\n";

// Direct sum of four [2,1] repetition codes.
const char kC2x4[] = "11000000\n"
                     "00110000\n"
                     "00001100\n"
                     "00000011\n";

// [24,12,8], bordered-circulant form (I | B): border of ones plus an 11x11
// circulant over the quadratic non-residues mod 11.
const char kGolay24[] = "100000000000011111111111\n"
                        "010000000000110100011101\n"
                        "001000000000111010001110\n"
                        "000100000000101101000111\n"
                        "000010000000110110100011\n"
                        "000001000000111011010001\n"
                        "000000100000111101101000\n"
                        "000000010000101110110100\n"
                        "000000001000100111011010\n"
                        "000000000100100011101101\n"
                        "000000000010110001110110\n"
                        "000000000001101000111011\n";

// [48,24,12], extended quadratic residue code over {inf} + Z_47 with the
// parity coordinate first; rows are the cyclic shifts of the degree-23
// generator polynomial.
const char kQr48[] = "111110111011011100011000100000000000000000000000\n"
                     "101111011101101110001100010000000000000000000000\n"
                     "100111101110110111000110001000000000000000000000\n"
                     "100011110111011011100011000100000000000000000000\n"
                     "100001111011101101110001100010000000000000000000\n"
                     "100000111101110110111000110001000000000000000000\n"
                     "100000011110111011011100011000100000000000000000\n"
                     "100000001111011101101110001100010000000000000000\n"
                     "100000000111101110110111000110001000000000000000\n"
                     "100000000011110111011011100011000100000000000000\n"
                     "100000000001111011101101110001100010000000000000\n"
                     "100000000000111101110110111000110001000000000000\n"
                     "100000000000011110111011011100011000100000000000\n"
                     "100000000000001111011101101110001100010000000000\n"
                     "100000000000000111101110110111000110001000000000\n"
                     "100000000000000011110111011011100011000100000000\n"
                     "100000000000000001111011101101110001100010000000\n"
                     "100000000000000000111101110110111000110001000000\n"
                     "100000000000000000011110111011011100011000100000\n"
                     "100000000000000000001111011101101110001100010000\n"
                     "100000000000000000000111101110110111000110001000\n"
                     "100000000000000000000011110111011011100011000100\n"
                     "100000000000000000000001111011101101110001100010\n"
                     "100000000000000000000000111101110110111000110001\n";

struct BuiltinSpec {
    const char* text;
    int min_weight;
    // Expected nonzero weight counts; validated against a full enumeration.
    std::vector<std::pair<int, uint64_t>> distribution;
};

const std::map<std::string, BuiltinSpec, std::less<>>& builtin_specs() {
    static const std::map<std::string, BuiltinSpec, std::less<>> specs = {
        {"e8", {kE8, 4, {{0, 1}, {4, 14}, {8, 1}}}},
        {"c2x4", {kC2x4, 2, {{0, 1}, {2, 4}, {4, 6}, {6, 4}, {8, 1}}}},
        {"golay24", {kGolay24, 8, {{0, 1}, {8, 759}, {12, 2576}, {16, 759}, {24, 1}}}},
        {"qr48",
         {kQr48,
          12,
          {{0, 1},
           {12, 17296},
           {16, 535095},
           {20, 3995376},
           {24, 7681680},
           {28, 3995376},
           {32, 535095},
           {36, 17296},
           {48, 1}}}},
    };
    return specs;
}

LinearCode load_validated(const std::string& name, const BuiltinSpec& spec) {
    LinearCode code = load_code(spec.text);
    if (!code.is_self_dual())
        throw Error(ErrorKind::NotSelfDual, "bundled code " + name + " failed self-duality");
    WeightDistribution dist = weight_distribution(code);
    if (dist.pairs() != spec.distribution)
        throw Error(ErrorKind::MalformedInput,
                    "bundled code " + name + " has an unexpected weight distribution");
    int mw = 0;
    for (int k = 1; k <= dist.n; ++k) {
        if (dist.counts[static_cast<size_t>(k)]) {
            mw = k;
            break;
        }
    }
    if (mw != spec.min_weight)
        throw Error(ErrorKind::MalformedInput,
                    "bundled code " + name + " has an unexpected minimum weight");
    return code;
}

} // namespace

LinearCode builtin_code(std::string_view name) {
    auto it = builtin_specs().find(name);
    if (it == builtin_specs().end())
        throw Error(ErrorKind::UnknownCode, "unknown code '" + std::string(name) + "'");
    static std::mutex mutex;
    static std::map<std::string, LinearCode, std::less<>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto cached = cache.find(name);
    if (cached == cache.end())
        cached = cache.emplace(std::string(name), load_validated(it->first, it->second)).first;
    return cached->second;
}

const std::vector<std::string>& builtin_code_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, spec] : builtin_specs()) v.push_back(name);
        return v;
    }();
    return names;
}

} // namespace wenum
