#include "wenum/verify.hpp"

#include "wenum/balance.hpp"
#include "wenum/designs.hpp"
#include "wenum/enumerator.hpp"
#include "wenum/error.hpp"
#include "wenum/krawtchouk.hpp"
#include "wenum/linear_code.hpp"
#include "wenum/reference.hpp"
#include "wenum/transform.hpp"

#include <bit>
#include <chrono>
#include <sstream>

namespace wenum {

namespace {

std::string normalize_ws(const std::string& s) {
    std::string out;
    bool in_space = false;
    for (char ch : s) {
        if (ch == ' ' || ch == '\t') {
            in_space = true;
            continue;
        }
        if (in_space && !out.empty()) out.push_back(' ');
        in_space = false;
        out.push_back(ch);
    }
    return out;
}

// Compares a computed derivative against a reference listing, whitespace
// insensitively.
std::string diff_against_reference(const Derivative& d,
                                   const reference::ReferenceVector& ref) {
    if (d.n != ref.n || d.order != ref.t) return "header mismatch";
    if (d.entries.size() != ref.entries.size()) return "length mismatch";
    for (size_t i = 0; i < d.entries.size(); ++i) {
        if (normalize_ws(to_rho_string(d.entries[i])) != normalize_ws(ref.entries[i])) {
            std::ostringstream os;
            os << "entry " << i << ": computed '" << to_rho_string(d.entries[i])
               << "', reference '" << ref.entries[i] << "'";
            return os.str();
        }
    }
    return "";
}

struct Check {
    std::string label;
    std::string failure; // empty = pass
    std::string summary;

    void fail(const std::string& msg) {
        if (failure.empty()) failure = msg;
    }
    void require(bool ok, const std::string& msg) {
        if (!ok) fail(msg);
    }
};

Check golden_golay24() {
    Check c{.label = "1: golay24 order-19 golden vector (direct and design)"};
    LinearCode code = builtin_code("golay24");
    Derivative direct = derivative(code, 19);
    Derivative design = derivative_from_designs(profile_from_code(code));
    std::string d1 = diff_against_reference(direct, reference::golay24_order19());
    std::string d2 = diff_against_reference(design, reference::golay24_order19());
    c.require(d1.empty(), "direct: " + d1);
    c.require(d2.empty(), "design: " + d2);
    c.require(direct.entries == design.entries, "direct and design disagree");
    c.summary = "32 entries exact, both methods";
    return c;
}

Check golden_qr48_design() {
    Check c{.label = "2a: qr48 order-43 golden vector (design)"};
    Derivative design = derivative_from_designs(profile_from_code(builtin_code("qr48")));
    std::string d = diff_against_reference(design, reference::qr48_order43());
    c.require(d.empty(), d);
    c.summary = "32 entries exact";
    return c;
}

Check golden_qr48_direct() {
    Check c{.label = "2b: qr48 order-43 direct enumeration cross-check"};
    LinearCode code = builtin_code("qr48");
    Derivative direct = derivative(code, 43);
    std::string d = diff_against_reference(direct, reference::qr48_order43());
    c.require(d.empty(), d);
    c.summary = "2^24 codewords agree entry-for-entry";
    return c;
}

Check golden_length72() {
    Check c{.label = "3: length-72 order-67 golden vector (design profile)"};
    Derivative d = derivative_from_designs(profile_from_distribution(putative72_distribution()));
    std::string diff = diff_against_reference(d, reference::length72_order67());
    c.require(diff.empty(), diff);
    c.summary = "32 entries exact";
    return c;
}

Check eigen_checks() {
    Check c{.label = "4: eigenspace membership of derivatives"};
    for (const char* name : {"golay24", "qr48"}) {
        Derivative d = derivative_from_designs(profile_from_code(builtin_code(name)));
        c.require(is_eigenvector_one(d.to_spectral()),
                  std::string(name) + " order n-5 vector not fixed by K^[5]");
    }
    Derivative d72 = derivative_from_designs(profile_from_distribution(putative72_distribution()));
    c.require(is_eigenvector_one(d72.to_spectral()), "length-72 vector not fixed by K^[5]");
    for (const char* name : {"e8", "c2x4"}) {
        LinearCode code = builtin_code(name);
        for (int t = 0; t <= 8; ++t) {
            if (!is_eigenvector_one(derivative(code, t).to_spectral())) {
                std::ostringstream os;
                os << name << " order " << t << " not fixed by K^[" << 8 - t << "]";
                c.fail(os.str());
            }
        }
    }
    LinearCode golay = builtin_code("golay24");
    for (int t = 19; t <= 24; ++t) {
        if (!is_eigenvector_one(derivative(golay, t).to_spectral())) {
            std::ostringstream os;
            os << "golay24 order " << t << " not fixed by K^[" << 24 - t << "]";
            c.fail(os.str());
        }
    }
    c.summary = "3 golden vectors, e8/c2x4 t=0..8, golay24 t=19..24";
    return c;
}

Check balance_checks() {
    Check c{.label = "5: balance identity at every coordinate"};
    for (const char* name : {"e8", "c2x4", "golay24", "qr48"}) {
        LinearCode code = builtin_code(name);
        std::vector<BalanceReport> reports = balance_check_all(code);
        for (const BalanceReport& r : reports) {
            if (!r.pass()) {
                std::ostringstream os;
                os << name << " coordinate " << r.coordinate << " failed";
                c.fail(os.str());
            }
            if (!(r.lhs == reports[0].lhs)) {
                std::ostringstream os;
                os << name << " lhs differs between coordinates 1 and " << r.coordinate;
                c.fail(os.str());
            }
        }
    }
    RefinedDistribution refined = refined_distribution(builtin_code("golay24"), 1);
    c.require(refined.at(8, 0) == 506, "golay24 A_{8,0} != 506");
    c.require(refined.at(12, 0) == 1288, "golay24 A_{12,0} != 1288");
    c.summary = "e8, c2x4, golay24, qr48; lhs coordinate-independent";
    return c;
}

Check elimination_pipeline() {
    Check c{.label = "6: length-8 candidate enumeration and elimination"};
    std::vector<WeightDistribution> candidates = enumerate_candidates(8);
    const auto& expected = reference::candidates8();
    c.require(candidates.size() == expected.size(), "candidate count != 8");
    if (candidates.size() == expected.size()) {
        for (size_t i = 0; i < candidates.size(); ++i)
            c.require(candidates[i].to_csv() == expected[i],
                      "candidate " + std::to_string(i) + " mismatch");
    }
    std::vector<std::string> survivors;
    const auto& expected_y = reference::candidate8_y_values();
    for (size_t i = 0; i < candidates.size(); ++i) {
        EliminationVerdict v = eliminate_length8(candidates[i]);
        c.require(v.y.has_value(), "candidate " + std::to_string(i) + " inconsistent");
        if (v.y && i < expected_y.size())
            c.require(to_string(*v.y) == expected_y[i],
                      "candidate " + std::to_string(i) + ": y = " + to_string(*v.y) +
                          ", expected " + expected_y[i]);
        if (v.survives) survivors.push_back(candidates[i].to_csv());
    }
    c.require(survivors == reference::candidate8_survivors(), "survivor set mismatch");
    c.summary = "8 candidates, y values exact, survivors = the two real codes";
    return c;
}

Check lemma_properties() {
    Check c{.label = "7: basis/recursion/halves/scalar property sweeps"};
    // Eigenbasis rows: even labels fixed, odd labels negated, for m <= 6.
    for (int m = 1; m <= 6; ++m) {
        for (uint64_t label = 0; label < (uint64_t(1) << m); ++label) {
            SpectralVector row = eigenbasis_row(m, label);
            bool even = std::popcount(label) % 2 == 0;
            if (even != is_eigenvector_one(row)) {
                c.fail("eigenbasis row m=" + std::to_string(m) + " label=" +
                       std::to_string(label) + " on the wrong eigenvalue");
                continue;
            }
            if (!even) {
                SpectralVector h = apply_hadamard_power(row);
                QuadRat scale = sqrt2_pow(static_cast<unsigned>(m));
                for (size_t i = 0; i < h.entries.size(); ++i)
                    if (h.entries[i] != -(scale * row.entries[i]))
                        c.fail("odd-label row not negated (m=" + std::to_string(m) + ")");
            }
        }
    }
    // Step recursion against direct computation, halves relation, collapse.
    auto sweep = [&c](const char* name, int t_lo) {
        LinearCode code = builtin_code(name);
        int n = code.length();
        QuadRat scalar = rho_weight_sum(weight_distribution(code));
        Derivative cur = derivative(code, t_lo);
        for (int t = t_lo; t <= n; ++t) {
            if (t > t_lo) {
                cur = derivative_step(cur);
                if (cur.entries != derivative(code, t).entries)
                    c.fail(std::string(name) + ": step != direct at order " + std::to_string(t));
            }
            if (t <= n - 1 && !check_halves(cur))
                c.fail(std::string(name) + ": halves relation failed at order " +
                       std::to_string(t));
            if (rho_weighted_sum(cur) != scalar)
                c.fail(std::string(name) + ": collapse != order-n scalar at order " +
                       std::to_string(t));
        }
        if (cur.entries.size() != 1 || cur.entries[0] != scalar)
            c.fail(std::string(name) + ": order-n value != sum A_k rho^k");
    };
    sweep("e8", 0);
    sweep("c2x4", 0);
    sweep("golay24", 19);
    sweep("qr48", 30);
    c.summary = "basis rows m<=6; e8/c2x4 t=0..8, golay24 t>=19, qr48 t>=30";
    return c;
}

Check indicator_round_trip() {
    Check c{.label = "8: indicator round-trip"};
    for (const char* name : {"e8", "c2x4", "golay24"}) {
        LinearCode code = builtin_code(name);
        ExactEnumerator we = exact_enumerator(code);
        LinearCode back = code_from_indicator(we.n, we.to_dense());
        c.require(back.same_code(code),
                  std::string(name) + " round-trip produced a different code");
    }
    c.summary = "e8, c2x4, golay24 recovered from their 0/1 vectors";
    return c;
}

CheckResult timed(Check (*fn)()) {
    auto start = std::chrono::steady_clock::now();
    CheckResult result;
    try {
        Check c = fn();
        result.label = c.label;
        result.pass = c.failure.empty();
        result.detail = result.pass ? c.summary : c.failure;
    } catch (const std::exception& e) {
        result.label = "(aborted)";
        result.pass = false;
        result.detail = std::string("exception: ") + e.what();
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

} // namespace

std::vector<CheckResult> run_verification_suite() {
    std::vector<CheckResult> results;
    for (auto fn : {golden_golay24, golden_qr48_design, golden_qr48_direct, golden_length72,
                    eigen_checks, balance_checks, elimination_pipeline, lemma_properties,
                    indicator_round_trip})
        results.push_back(timed(fn));
    return results;
}

} // namespace wenum
