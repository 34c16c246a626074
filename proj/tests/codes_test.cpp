#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wenum/enumerator.hpp"
#include "wenum/error.hpp"
#include "wenum/linear_code.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

using namespace wenum;

namespace {

// Independent enumeration route: encode every message directly instead of
// Gray-stepping.
std::vector<Bits128> naive_codewords(const LinearCode& code) {
    std::vector<Bits128> out;
    for (uint64_t m = 0; m < code.codeword_count(); ++m) out.push_back(code.encode(m));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<uint64_t> naive_distribution(const LinearCode& code) {
    std::vector<uint64_t> counts(static_cast<size_t>(code.length()) + 1, 0);
    for (Bits128 w : naive_codewords(code)) ++counts[static_cast<size_t>(popcount128(w))];
    return counts;
}

} // namespace

TEST_CASE("binary words") {
    BinaryWord w = BinaryWord::from_string("10110");
    CHECK(w.n == 5);
    CHECK(w.bits == 0b10110);
    CHECK(w.weight() == 3);
    CHECK(w.coordinate(1) == 1); // coordinate 1 is the most significant bit
    CHECK(w.coordinate(2) == 0);
    CHECK(w.complement().to_string() == "01001");
    CHECK(w.concat(BinaryWord::from_string("01")).to_string() == "1011001");

    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        int n = 1 + static_cast<int>(rng() % 100);
        BinaryWord v(n, (Bits128(rng()) << 64) | rng());
        CHECK(v.weight() + v.complement().weight() == n);
        CHECK(BinaryWord::from_string(v.to_string()) == v);
    }
}

TEST_CASE("bundled codes validate") {
    LinearCode e8 = builtin_code("e8");
    CHECK(e8.is_self_dual());
    CHECK(weight_distribution(e8).counts == std::vector<uint64_t>{1, 0, 0, 0, 14, 0, 0, 0, 1});
    CHECK(min_weight(e8) == 4);

    LinearCode c2x4 = builtin_code("c2x4");
    CHECK(weight_distribution(c2x4).counts == std::vector<uint64_t>{1, 0, 4, 0, 6, 0, 4, 0, 1});
    CHECK(min_weight(c2x4) == 2);

    LinearCode golay = builtin_code("golay24");
    WeightDistribution gd = weight_distribution(golay);
    CHECK(gd.counts[8] == 759);
    CHECK(gd.counts[12] == 2576);
    CHECK(gd.counts[16] == 759);
    CHECK(gd.counts[24] == 1);
    CHECK(gd.total() == 4096);
    CHECK(min_weight(golay) == 8);

    CHECK_THROWS_AS(builtin_code("nope"), Error);
}

TEST_CASE("qr48 distribution by full enumeration") {
    LinearCode qr = builtin_code("qr48");
    CHECK(qr.is_self_dual());
    WeightDistribution dist = weight_distribution(qr);
    CHECK(dist.counts[12] == 17296);
    CHECK(dist.counts[16] == 535095);
    CHECK(dist.counts[20] == 3995376);
    CHECK(dist.counts[24] == 7681680);
    CHECK(dist.symmetric());
    CHECK(dist.total() == uint64_t(1) << 24);
    CHECK(min_weight(qr) == 12);
}

TEST_CASE("all-one word and even weights in every bundled code") {
    for (const std::string& name : builtin_code_names()) {
        LinearCode code = builtin_code(name);
        CHECK(code.is_self_dual());
        CHECK(code.contains(low_mask128(code.length())));
        WeightDistribution dist = weight_distribution(code);
        for (int k = 1; k <= dist.n; k += 2) CHECK(dist.counts[static_cast<size_t>(k)] == 0);
        CHECK(dist.counts[0] == 1);
        CHECK(dist.symmetric());
    }
}

TEST_CASE("gray enumeration agrees with direct encoding") {
    for (const char* name : {"e8", "golay24"}) {
        LinearCode code = builtin_code(name);
        std::vector<Bits128> walked;
        walk_codewords(code.rows(), 0, code.codeword_count(),
                       [&](Bits128 w) { walked.push_back(w); });
        std::sort(walked.begin(), walked.end());
        CHECK(walked == naive_codewords(code));
    }
}

TEST_CASE("thread count does not change results") {
    LinearCode golay = builtin_code("golay24");
    WeightDistribution base = weight_distribution(golay);
    ::setenv("WENUM_THREADS", "4", 1);
    CHECK(weight_distribution(golay).counts == base.counts);
    RefinedDistribution r1 = refined_distribution(golay, 5);
    ::unsetenv("WENUM_THREADS");
    RefinedDistribution r2 = refined_distribution(golay, 5);
    CHECK(r1.with_one == r2.with_one);
    CHECK(r1.with_zero == r2.with_zero);
}

TEST_CASE("generator matrix files round-trip") {
    const char* dir = WENUM_DATA_DIR;
    for (const std::string& name : builtin_code_names()) {
        LinearCode from_file = load_code_file(std::string(dir) + "/" + name + ".gen");
        CHECK(from_file.same_code(builtin_code(name)));
    }
}

TEST_CASE("load_code rejects malformed input distinctly") {
    CHECK_THROWS_WITH_AS(load_code("10\n0"), "rows have differing lengths", Error);
    CHECK_THROWS_AS(load_code("abc\n"), Error);
    CHECK_THROWS_AS(load_code(""), Error);
    CHECK_THROWS_AS(load_code("101\n010\n"), Error); // odd length
    CHECK_THROWS_AS(load_code("1100\n"), Error);     // wrong row count

    // Dependent rows load but are flagged distinctly from non-orthogonality.
    LinearCode dependent = load_code("1100\n1100\n");
    CHECK(dependent.self_dual_status() == SelfDualStatus::DependentRows);
    CHECK_THROWS_AS(weight_distribution(dependent), Error);

    LinearCode not_orth = load_code("1000\n0100\n");
    CHECK(not_orth.self_dual_status() == SelfDualStatus::NotOrthogonal);
    CHECK_FALSE(not_orth.is_self_dual());

    LinearCode rep2 = load_code("# comment\n11\n");
    CHECK(rep2.is_self_dual());
    CHECK(min_weight(rep2) == 2);
}

TEST_CASE("repetition pairs give minimum weight 2") {
    // [2,1] repetition code repeated four times; check against the
    // 16-codeword brute force.
    LinearCode code = load_code("11000000\n00110000\n00001100\n00000011\n");
    std::vector<uint64_t> naive = naive_distribution(code);
    int naive_min = 0;
    for (size_t k = 1; k < naive.size(); ++k)
        if (naive[k]) {
            naive_min = static_cast<int>(k);
            break;
        }
    CHECK(naive_min == 2);
    CHECK(min_weight(code) == 2);
    CHECK(weight_distribution(code).counts == naive);
}

TEST_CASE("refined distribution") {
    LinearCode golay = builtin_code("golay24");
    RefinedDistribution refined = refined_distribution(golay, 1);
    CHECK(refined.at(8, 0) == 506);
    CHECK(refined.at(12, 0) == 1288);
    CHECK(refined.at(0, 0) == 1);
    CHECK(refined.at(24, 1) == 1);

    LinearCode e8 = builtin_code("e8");
    for (int t = 1; t <= 8; ++t) CHECK(refined_distribution(e8, t).at(4, 1) == 7);

    CHECK_THROWS_AS(refined_distribution(e8, 0), Error);
    CHECK_THROWS_AS(refined_distribution(e8, 9), Error);
}

TEST_CASE("refined distribution invariants across all coordinates") {
    for (const char* name : {"e8", "c2x4", "golay24"}) {
        LinearCode code = builtin_code(name);
        WeightDistribution dist = weight_distribution(code);
        std::vector<RefinedDistribution> all = refined_distribution_all(code);
        REQUIRE(all.size() == static_cast<size_t>(code.length()));
        for (const RefinedDistribution& r : all) {
            RefinedDistribution single = refined_distribution(code, r.coordinate);
            CHECK(single.with_zero == r.with_zero);
            CHECK(single.with_one == r.with_one);
            for (int k = 0; k <= r.n; ++k) {
                CHECK(r.at(k, 0) + r.at(k, 1) == dist.counts[static_cast<size_t>(k)]);
                CHECK(r.at(k, 0) == r.at(r.n - k, 1)); // complement bijection
            }
        }
    }
}

TEST_CASE("code from indicator") {
    for (const char* name : {"e8", "c2x4"}) {
        LinearCode code = builtin_code(name);
        ExactEnumerator we = exact_enumerator(code);
        LinearCode back = code_from_indicator(we.n, we.to_dense());
        CHECK(back.same_code(code));
    }

    // {00, 11} is the length-2 repetition code.
    LinearCode rep2 = code_from_indicator(2, {1, 0, 0, 1});
    CHECK(rep2.length() == 2);
    CHECK(rep2.same_code(load_code("11\n")));

    // Failure modes are reported distinctly.
    try {
        code_from_indicator(2, {1, 1, 1, 0}); // size 3 != 2
        FAIL("expected WrongSupportSize");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::WrongSupportSize);
    }
    try {
        code_from_indicator(2, {0, 1, 1, 0}); // right size, no zero word
        FAIL("expected SupportNotClosed");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SupportNotClosed);
    }
    try {
        code_from_indicator(2, {1, 1, 0, 0}); // span of 01: not self-dual
        FAIL("expected NotSelfDual");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotSelfDual);
    }
    CHECK_THROWS_AS(code_from_indicator(2, {0, 0, 0, 0}), Error);
    CHECK_THROWS_AS(code_from_indicator(2, {1, 2, 0, 0}), Error);
}

TEST_CASE("distribution csv round-trip") {
    WeightDistribution d = WeightDistribution::from_csv("1,0,4,0,6,0,4,0,1");
    CHECK(d.n == 8);
    CHECK(d.to_csv() == "1,0,4,0,6,0,4,0,1");
    CHECK(d.pairs() ==
          std::vector<std::pair<int, uint64_t>>{{0, 1}, {2, 4}, {4, 6}, {6, 4}, {8, 1}});
    CHECK_THROWS_AS(WeightDistribution::from_csv("1,x,1"), Error);
    CHECK_THROWS_AS(WeightDistribution::from_csv("5"), Error);
}
