#pragma once

#include "wenum/linear_code.hpp"
#include "wenum/quadrat.hpp"

#include <optional>
#include <vector>

namespace wenum {

/// Balance identity at one coordinate:
///   lhs    = sum_k A_{k,1} rho^(k-1)
///   rhs    = sum_k A_{k,0} rho^(k+1)
///   target = (1+rho)/4 * sum_k A_k rho^k
/// All three must agree exactly; the comparisons are reported separately.
struct BalanceReport {
    int coordinate = 0;
    QuadRat lhs, rhs, target;
    bool lhs_eq_rhs = false;
    bool rhs_eq_target = false;

    bool pass() const { return lhs_eq_rhs && rhs_eq_target; }
};

BalanceReport balance_check(const LinearCode& code, int coordinate);
/// Every coordinate in one enumeration pass.
std::vector<BalanceReport> balance_check_all(const LinearCode& code);
/// Balance report from an already-computed refined table.
BalanceReport balance_from_refined(const RefinedDistribution& refined);

/// Outcome of solving the balance identity for the one free refined count
/// of a length-8 candidate distribution (y = A_{2,0}).
struct EliminationVerdict {
    WeightDistribution candidate;
    std::optional<Rational> y; // empty when the two component equations disagree
    bool survives = false;     // y is an integer with 0 <= y <= A_2

    std::string describe() const;
};

/// Solve the balance identity for y over the rationals. The candidate must
/// be a plausible length-8 self-dual distribution: A_0 = 1, odd weights
/// zero, A_k = A_{8-k}, A_4 even, total 16 (InvalidCandidate otherwise).
EliminationVerdict eliminate_length8(const WeightDistribution& candidate);

/// The refined table implied by a candidate and a y value (used to compare
/// surviving candidates against real codes).
RefinedDistribution implied_refined_table(const WeightDistribution& candidate, const Rational& y);

} // namespace wenum
